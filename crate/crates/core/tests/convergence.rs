use harmonica::catalog::registry;
use harmonica::limits::{check_convergence, known_limit_table, zeta6_identity, Verdict};
use harmonica::{Limit, Real};

const N: u64 = 10_000;
const BITS: u32 = 256;

// Entries whose printed decimal does not round from the stated limit; the
// computed value each should show instead.
const PRINTED_MISMATCHES: [(&str, &str); 1] = [("lemSumHj2j2j4", "0.396")];

#[test]
fn every_convergent_entry_closes_its_gap() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for entry in registry().entries() {
        for params in entry.domain.grid(4) {
            if !matches!(entry.limit(params), Limit::Finite(_)) {
                continue;
            }
            let report = check_convergence(entry, params, N, BITS).unwrap();
            checked += 1;
            if let Some(&(_, actual)) = PRINTED_MISMATCHES.iter().find(|(id, _)| *id == entry.id) {
                assert_eq!(report.printed_matches, Some(false));
                assert!(report.limit_value.starts_with(actual), "{}", report.limit_value);
                assert_eq!(report.verdict, Verdict::Pass);
                continue;
            }
            if report.verdict != Verdict::Pass || report.printed_matches == Some(false) {
                failures.push(format!(
                    "{} {:?}: gap {} bound {} monotone {} printed {:?}",
                    entry.id, params, report.final_gap, report.final_bound, report.monotone, report.printed_matches
                ));
            }
        }
    }
    assert!(checked >= 60, "only {checked} convergent instances");
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn printed_decimals_of_selected_limits() {
    let cases = [
        ("lemSumHi2i1sqi2", "0.167"),
        ("lemSumHi2i1i2sq", "0.123"),
        ("lemSumHi2i1sqi2sq", "0.044"),
        ("lemSumHisqi1i2", "2.645"),
        ("lemSumHi2sqi1i2", "0.859"),
        ("lemSumHi2sqisq", "2.250"),
        ("lemSumHi2i1i2", "0.645"),
    ];
    for (id, printed) in cases {
        let entry = registry().get(id).unwrap();
        assert_eq!(entry.printed, Some(printed), "{id}");
        let report = check_convergence(entry, Default::default(), N, BITS).unwrap();
        assert_eq!(report.printed_matches, Some(true), "{id}: {}", report.limit_value);
        assert_eq!(report.verdict, Verdict::Pass, "{id}");
    }
}

#[test]
fn known_limits_at_one_hundred_thousand() {
    let rows = known_limit_table(100_000, BITS).unwrap();
    assert_eq!(rows.len(), 5);
    let constants: Vec<u32> = rows.iter().map(|r| r.bound_constant).collect();
    assert_eq!(constants, [1, 1, 1, 2, 1]);
    for row in rows {
        assert_eq!(row.verdict, Verdict::Pass, "{}: gap {} bound {}", row.sum, row.gap, row.bound);
    }
}

#[test]
fn zeta6_identity_to_two_hundred_bits() {
    assert!(zeta6_identity(200) <= Real::ulp(192));
}
