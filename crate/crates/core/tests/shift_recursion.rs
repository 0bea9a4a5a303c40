use harmonica::{direct_eval, eval_shift_recursion, HarmonicTable, Real, ShiftFamily};

#[test]
fn recursions_in_m_match_direct_summation() {
    let table = HarmonicTable::build(80, 6).unwrap();
    for family in ShiftFamily::ALL {
        for m in 1..=8 {
            for n in (0..=60).step_by(3) {
                let spec = family.spec(n, m);
                let got = eval_shift_recursion(family, n, m, &table).unwrap();
                assert_eq!(got, direct_eval(&spec, &table).unwrap(), "{family} m={m} n={n}");
            }
        }
    }
}

#[test]
fn recursions_in_m_hold_in_fixed_point() {
    let table = HarmonicTable::<Real>::build_real(400, 6, 192).unwrap();
    for family in ShiftFamily::ALL {
        for m in [1, 4, 7] {
            let spec = family.spec(300, m);
            let got = eval_shift_recursion(family, 300, m, &table).unwrap();
            let want = direct_eval(&spec, &table).unwrap();
            let err = (got - want).abs();
            assert!(err <= Real::ulp(160), "{family} m={m}: error {}", err.to_f64());
        }
    }
}

#[test]
fn offset_zero_is_rejected() {
    let table = HarmonicTable::build(10, 4).unwrap();
    assert!(eval_shift_recursion(ShiftFamily::H1OverJm, 5, 0, &table).is_err());
}
