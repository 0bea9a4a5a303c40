use harmonica::catalog::registry;
use harmonica::{BasePolicy, Evaluator, HarmonicTable, Rational, SumSpec};
use once_cell::sync::Lazy;
use proptest::prelude::*;

const CASES: u32 = 10_000;

static TABLE: Lazy<HarmonicTable> = Lazy::new(|| HarmonicTable::build(120, 8).unwrap());

thread_local! {
    // base-sum leaves are shared across cases
    static CATALOG: Evaluator<'static> = Evaluator::new(&TABLE, BasePolicy::CatalogFirst);
    static ORACLE: Evaluator<'static> = Evaluator::new(&TABLE, BasePolicy::OracleOnly);
}

fn table() -> &'static HarmonicTable {
    &TABLE
}

fn reduce(policy: BasePolicy, spec: &SumSpec) -> harmonica::TraceNode {
    let run = |ev: &Evaluator<'static>| ev.eval(spec).unwrap();
    match policy {
        BasePolicy::CatalogFirst => CATALOG.with(run),
        BasePolicy::OracleOnly => ORACLE.with(run),
    }
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Index into the registry plus a parameter choice within its domain.
fn entry_choice() -> impl Strategy<Value = (usize, usize)> {
    (0..registry().len(), 0usize..64)
}

fn theorem_spec() -> impl Strategy<Value = SumSpec> {
    (any::<bool>(), 0u64..=40, 0u32..=4, 0u32..=4, 0u64..=3, 0u64..=3, 1u32..=2)
        .prop_filter("p + q in [2, 4]", |&(_, _, p, q, ..)| (2..=4).contains(&(p + q)))
        .prop_map(|(is_v, n, p, q, r, s, m)| {
            if is_v {
                SumSpec::v(n, p, q, r, s, m)
            } else {
                SumSpec::g(n, p, q, r, s, m)
            }
        })
}

fn partial(spec: &SumSpec, from: u64, to: u64, table: &HarmonicTable) -> Rational {
    (from + 1..=to).map(|j| spec.summand(j, table).unwrap()).sum()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn additivity((idx, pick) in entry_choice(), a in 0u64..=50, b in 0u64..=50) {
        let table = table();
        let entry = &registry().entries()[idx];
        let grid = entry.domain.grid(6);
        let params = grid[pick % grid.len()];
        let (a, b) = (a.max(entry.n_min), b);
        let whole: Rational = entry.evaluate(a + b, params, table).unwrap();
        let head: Rational = entry.evaluate(a, params, table).unwrap();
        let spec = entry.spec(a + b, params);
        prop_assert_eq!(whole - head, partial(&spec, a, a + b, table));
    }

    #[test]
    fn telescoping((idx, pick) in entry_choice(), n in 1u64..=80) {
        let table = table();
        let entry = &registry().entries()[idx];
        let grid = entry.domain.grid(6);
        let params = grid[pick % grid.len()];
        let n = n.max(entry.n_min + 1);
        let here: Rational = entry.evaluate(n, params, table).unwrap();
        let before: Rational = entry.evaluate(n - 1, params, table).unwrap();
        prop_assert_eq!(here - before, entry.spec(n, params).summand(n, table).unwrap());
    }

    #[test]
    fn shift_symmetry(spec in theorem_spec()) {
        let table = table();
        let (p, q, r, s) = (spec.p(), spec.q(), spec.r(), spec.s());
        let swapped = match spec.kind {
            harmonica::SumKind::V => SumSpec::v(spec.n, q, p, s, r, spec.order),
            _ => SumSpec::g(spec.n, q, p, s, r, spec.order),
        };
        let direct = reduce(BasePolicy::CatalogFirst, &spec).value;
        prop_assert_eq!(&direct, &reduce(BasePolicy::CatalogFirst, &swapped).value);
        prop_assert_eq!(direct, partial(&spec, 0, spec.n, table));
    }

    #[test]
    fn trace_replay(spec in theorem_spec()) {
        let trace = reduce(BasePolicy::CatalogFirst, &spec);
        prop_assert!(trace.is_consistent());
        prop_assert_eq!(trace.replay(), trace.value.clone());
        prop_assert!(trace.leaves().iter().all(|l| l.rule.is_leaf()));
    }

    #[test]
    fn base_policy_independence(spec in theorem_spec()) {
        let catalog = reduce(BasePolicy::CatalogFirst, &spec);
        let oracle = reduce(BasePolicy::OracleOnly, &spec);
        prop_assert_eq!(catalog.value, oracle.value);
    }
}
