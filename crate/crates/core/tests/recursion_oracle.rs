use harmonica::recursion::depth_bound;
use harmonica::{direct_eval, eval_g, eval_v, BasePolicy, Evaluator, HarmonicTable, Rational, SumSpec};

fn grid() -> Vec<(u32, u32, u64, u64, u32)> {
    let mut out = Vec::new();
    for p in 0..=4u32 {
        for q in 0..=4u32 {
            if !(2..=4).contains(&(p + q)) {
                continue;
            }
            for r in 0..=3 {
                for s in 0..=3 {
                    for m in 1..=2 {
                        out.push((p, q, r, s, m));
                    }
                }
            }
        }
    }
    out
}

fn check(kind: &str, policy: BasePolicy) {
    let table = HarmonicTable::build(64, 8).unwrap();
    let evaluator = Evaluator::new(&table, policy);
    let mut failures = Vec::new();
    for (p, q, r, s, m) in grid() {
        let spec_at = |n| match kind {
            "G" => SumSpec::g(n, p, q, r, s, m),
            _ => SumSpec::v(n, p, q, r, s, m),
        };
        // running direct sum, checked against a fresh summation at the end
        let mut expected = Rational::zero();
        for n in 0..=50 {
            let spec = spec_at(n);
            if n > 0 {
                expected += spec.summand(n, &table).unwrap();
            }
            let trace = evaluator.eval(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
            if trace.value != expected {
                failures.push(format!("{spec}: {} != {expected}", trace.value));
                break;
            }
            assert!(trace.depth() <= depth_bound(&spec));
            // replay is as costly as the reduction; sample it
            if [1, 2, 7, 50].contains(&n) {
                assert!(trace.is_consistent(), "inconsistent trace for {spec}");
                assert_eq!(trace.replay(), trace.value, "replay of {spec}");
            }
        }
        assert_eq!(expected, direct_eval(&spec_at(50), &table).unwrap());
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn one_shot_entry_points_agree() {
    let table = HarmonicTable::build(40, 6).unwrap();
    let g = SumSpec::g(20, 2, 1, 1, 3, 2);
    let v = SumSpec::v(20, 1, 2, 2, 0, 1);
    assert_eq!(eval_g(&g, &table, BasePolicy::CatalogFirst).unwrap().0, direct_eval(&g, &table).unwrap());
    assert_eq!(eval_v(&v, &table, BasePolicy::OracleOnly).unwrap().0, direct_eval(&v, &table).unwrap());
}

#[test]
fn g_catalog_first() {
    check("G", BasePolicy::CatalogFirst);
}

#[test]
fn g_oracle_only() {
    check("G", BasePolicy::OracleOnly);
}

#[test]
fn v_catalog_first() {
    check("V", BasePolicy::CatalogFirst);
}

#[test]
fn v_oracle_only() {
    check("V", BasePolicy::OracleOnly);
}

#[test]
fn outside_hypothesis_is_rejected() {
    let table = HarmonicTable::build(10, 4).unwrap();
    let spec = SumSpec::g(5, 1, 0, 0, 0, 1);
    assert!(eval_g(&spec, &table, BasePolicy::CatalogFirst).is_err());
    let spec = SumSpec::g(5, 1, 1, 0, 1, 0);
    assert!(eval_g(&spec, &table, BasePolicy::CatalogFirst).is_err());
    let spec = SumSpec::v(5, 1, 1, 0, 1, 1);
    assert!(eval_g(&spec, &table, BasePolicy::CatalogFirst).is_err());
}
