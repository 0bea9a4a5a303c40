use harmonica::catalog::registry;
use harmonica::{direct_eval, HarmonicTable, Rational};

const N_MAX: u64 = 100;
const M_MAX: u64 = 8;

#[test]
fn every_entry_matches_direct_summation() {
    let table = HarmonicTable::build(N_MAX + 2 * M_MAX + 4, 6).unwrap();
    let mut failures = Vec::new();
    for entry in registry().entries() {
        for params in entry.domain.grid(M_MAX) {
            for n in entry.n_min..=N_MAX {
                let lhs: Rational = match entry.evaluate(n, params, &table) {
                    Ok(v) => v,
                    Err(e) => {
                        failures.push(format!("{} {params:?} n={n}: {e}", entry.id));
                        break;
                    }
                };
                let rhs = direct_eval(&entry.spec(n, params), &table).unwrap();
                if lhs != rhs {
                    failures.push(format!("{} {params:?} n={n}: {lhs} != {rhs}", entry.id));
                    break;
                }
            }
        }
    }
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}
