use harmonica::catalog::registry;
use harmonica::recursion::Rule;
use harmonica::{closed_form, eval_g, harmonic, BasePolicy, HarmonicTable, Params, Rational, SumSpec};

fn q(a: i64, b: i64) -> Rational {
    Rational::ratio(a, b)
}

#[test]
fn worked_values() {
    let table = HarmonicTable::build(20, 6).unwrap();
    assert_eq!(closed_form("lemSum0", 3, Params::NONE, &table).unwrap(), q(3, 4));
    assert_eq!(closed_form("lemSumHi2sqisq", 1, Params::NONE, &table).unwrap(), q(1, 1));
    let spec = SumSpec::g(2, 1, 1, 1, 2, 1);
    let (value, _) = eval_g(&spec, &table, BasePolicy::CatalogFirst).unwrap();
    assert_eq!(value, q(7, 24));
}

#[test]
fn aliases_resolve_to_the_same_formula() {
    let table = HarmonicTable::build(20, 6).unwrap();
    for (alias, id) in [
        ("lemSumHi2sqisqapp", "lemSumHi2sqisq"),
        ("lemSumHj1sqjmapp", "lemSumHj1sqjm"),
        ("lemSumj1sqjmapp", "lemSumj1sqjm"),
    ] {
        assert_eq!(registry().get(alias).unwrap().id, id);
        let p = registry().get(id).unwrap().domain.grid(3)[0];
        assert_eq!(
            closed_form(alias, 7, p, &table).unwrap(),
            closed_form(id, 7, p, &table).unwrap()
        );
    }
}

// The appendix states this sum through H_{n,k} rather than H_{n+1,k}.
#[test]
fn alternate_form_of_the_h2_squared_sum() {
    let table = HarmonicTable::build(80, 6).unwrap();
    for n in 0..=60u64 {
        let h = |m| harmonic(n, m).unwrap();
        let inv = |k: u64| q(1, (n + k) as i64);
        let h2 = h(2);
        let alternate = h2.clone() * h2.clone() - h2.clone() - h(3) + Rational::one()
            - h2.clone() * h2.clone() * inv(2)
            + h2 * inv(1) * 2
            - inv(1);
        assert_eq!(closed_form("lemSumHi2sqi1i2", n, Params::NONE, &table).unwrap(), alternate, "n={n}");
    }
}

// With p < q the prefactor is 1/(r - s)^p.
#[test]
fn smaller_first_exponent_prefactor() {
    let table = HarmonicTable::build(10, 4).unwrap();
    let spec = SumSpec::g(1, 1, 2, 0, 1, 1);
    let (value, trace) = eval_g(&spec, &table, BasePolicy::OracleOnly).unwrap();
    assert_eq!(value, q(1, 4));
    assert_eq!(trace.rule, Rule::PartialFractionPltq);
}

#[test]
fn catalog_leaves_name_their_formula() {
    let table = HarmonicTable::build(30, 6).unwrap();
    let spec = SumSpec::g(12, 2, 1, 0, 2, 1);
    let (_, trace) = eval_g(&spec, &table, BasePolicy::CatalogFirst).unwrap();
    let sources: Vec<_> = trace.leaves().iter().filter_map(|l| l.source.clone()).collect();
    assert!(sources.iter().any(|s| s.starts_with("lemSum")), "{sources:?}");
    let (_, oracle) = eval_g(&spec, &table, BasePolicy::OracleOnly).unwrap();
    assert!(oracle.leaves().iter().all(|l| l.rule == Rule::BaseOracle));
    let json = serde_json::to_value(&trace).unwrap();
    assert_eq!(json["rule"], "PARTIAL_FRACTION_PGTQ");
}

#[test]
fn domain_violations_are_reported() {
    let table = HarmonicTable::build(20, 6).unwrap();
    assert!(closed_form("lemSumj1sqjm", 4, Params::m(3), &table).is_ok());
    assert!(closed_form("lemSumj1sqjm", 4, Params::NONE, &table).is_err());
    assert!(closed_form("lemSumj1sqjm", 4, Params::m(0), &table).is_err());
    assert!(closed_form("lemSumNoSuchThing", 4, Params::NONE, &table).is_err());
}
