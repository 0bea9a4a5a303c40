//! Sums of reciprocals of products of shifted powers of `j`.

use super::{entry, form, lim, Family, FormulaEntry, ParamDomain, Params};
use crate::arith::{harmonic, Rational};
use crate::limits::{BasisConstant::*, Limit, LimitExpr};
use crate::oracle::SumSpec;
use crate::recursion::{shift_value, ShiftFamily};

fn rat(n: u64, list: &'static [(u64, u32)]) -> SumSpec {
    SumSpec::rational(n, list)
}

fn h(n: u64, m: u32) -> Rational {
    harmonic(n, m).expect("m >= 1")
}

fn jmjr_limit(p: Params) -> Limit {
    let (m, r) = (p.m.unwrap_or(0), p.r.unwrap_or(1));
    let value = (h(r, 1) - h(m, 1)) / Rational::ratio(r as i64 - m as i64, 1);
    Limit::Finite(LimitExpr::rational(value))
}

fn j1sqjm_limit(p: Params) -> Limit {
    let m = p.m.unwrap_or(1);
    if m == 1 {
        return Limit::Finite(lim(&[(Zeta3, 1, 1), (One, -1, 1)]));
    }
    let d = m as i64 - 1;
    let rest = Rational::ratio(-1, d) - h(m, 1) / Rational::ratio(d * d, 1) + Rational::ratio(1, d * d);
    Limit::Finite(lim(&[(Pi2, 1, 6 * d)]).plus(One, rest))
}

fn j2jm_limit(p: Params) -> Limit {
    match p.m.unwrap_or(1) {
        1 => Limit::Finite(lim(&[(One, 7, 4), (Pi2, -1, 6)])),
        2 => Limit::Finite(lim(&[(Zeta3, 1, 1), (One, -9, 8)])),
        m => {
            let d = m as i64 - 2;
            let rest = Rational::ratio(-5, 4 * d) + Rational::ratio(3, 2 * d * d)
                - h(m, 1) / Rational::ratio(d * d, 1);
            Limit::Finite(lim(&[(Pi2, 1, 6 * d)]).plus(One, rest))
        }
    }
}

pub(super) fn entries() -> Vec<FormulaEntry> {
    vec![
        entry(
            "lemSumjmjr",
            Family::Rational,
            |n, p| SumSpec::rational(n, &[(p.m.unwrap_or(0), 1), (p.r.unwrap_or(1), 1)]),
            form!(|c| {
                let (m, r) = (c.m(), c.r());
                (c.hc(r, 1) - c.hc(m, 1) - c.h(r as i64, 1) + c.h(m as i64, 1)) / (r as i64 - m as i64)
            }),
        )
        .params(ParamDomain::MR)
        .limit_by(jmjr_limit),
        entry(
            "lemSum0",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (1, 1)]),
            form!(|c| c.int(1) - c.inv(1, 1)),
        )
        .tends_to_unprinted(lim(&[(One, 1, 1)])),
        entry(
            "lemSum02",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (2, 1)]),
            form!(|c| c.q(3, 4) - c.inv(1, 1) / 2 - c.inv(2, 1) / 2),
        )
        .tends_to_unprinted(lim(&[(One, 3, 4)])),
        entry(
            "lemSum1",
            Family::Rational,
            |n, _| rat(n, &[(1, 1), (2, 1)]),
            form!(|c| c.q(1, 2) - c.inv(2, 1)),
        )
        .tends_to_unprinted(lim(&[(One, 1, 2)])),
        entry(
            "lemSumj2j3",
            Family::Rational,
            |n, _| rat(n, &[(2, 1), (3, 1)]),
            form!(|c| c.q(1, 3) - c.inv(3, 1)),
        )
        .tends_to_unprinted(lim(&[(One, 1, 3)])),
        entry(
            "lemSumj3j4",
            Family::Rational,
            |n, _| rat(n, &[(3, 1), (4, 1)]),
            form!(|c| c.q(1, 4) - c.inv(4, 1)),
        )
        .tends_to_unprinted(lim(&[(One, 1, 4)])),
        entry(
            "lemSumii1i2",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (1, 1), (2, 1)]),
            form!(|c| c.q(1, 4) - c.inv(1, 1) / 2 + c.inv(2, 1) / 2),
        )
        .tends_to_unprinted(lim(&[(One, 1, 4)])),
        entry(
            "lemSumj1j2j3",
            Family::Rational,
            |n, _| rat(n, &[(1, 1), (2, 1), (3, 1)]),
            form!(|c| c.q(1, 12) - c.inv(2, 1) / 2 + c.inv(3, 1) / 2),
        )
        .tends_to_unprinted(lim(&[(One, 1, 12)])),
        entry(
            "lemSumj2j3j4",
            Family::Rational,
            |n, _| rat(n, &[(2, 1), (3, 1), (4, 1)]),
            form!(|c| c.q(1, 24) - c.inv(3, 1) / 2 + c.inv(4, 1) / 2),
        )
        .tends_to_unprinted(lim(&[(One, 1, 24)])),
        entry(
            "lemSumj1j2j3j4",
            Family::Rational,
            |n, _| rat(n, &[(1, 1), (2, 1), (3, 1), (4, 1)]),
            form!(|c| c.q(1, 72) - c.inv(2, 1) / 6 + c.inv(3, 1) / 3 - c.inv(4, 1) / 6),
        )
        .tends_to_unprinted(lim(&[(One, 1, 72)])),
        entry(
            "lemSumii12",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (1, 2)]),
            form!(|c| c.int(2) - c.h(1, 2) - c.inv(1, 1)),
        )
        .tends_to(lim(&[(One, 2, 1), (Pi2, -1, 6)]), "0.355"),
        entry(
            "lemSumii2sq",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (2, 2)]),
            form!(|c| c.int(1) - c.h(2, 2) / 2 - c.inv(1, 1) / 4 - c.inv(2, 1) / 4),
        )
        .tends_to(lim(&[(One, 1, 1), (Pi2, -1, 12)]), "0.178"),
        entry(
            "lemSumj1sqjm",
            Family::RecursiveInM,
            |n, p| ShiftFamily::RationalJm.spec(n, p.m.unwrap_or(1)),
            form!(|c| shift_value(c, ShiftFamily::RationalJm, c.m())),
        )
        .alias("lemSumj1sqjmapp")
        .params(ParamDomain::M { min: 1 })
        .limit_by(j1sqjm_limit),
        entry(
            "lemSumi12i2",
            Family::Rational,
            |n, _| rat(n, &[(1, 2), (2, 1)]),
            form!(|c| c.h(1, 2) - c.q(3, 2) + c.inv(2, 1)),
        )
        .tends_to(lim(&[(Pi2, 1, 6), (One, -3, 2)]), "0.145"),
        entry(
            "lemSumj1s1j3",
            Family::Rational,
            |n, _| rat(n, &[(1, 2), (3, 1)]),
            form!(|c| c.h(1, 2) / 2 - c.q(17, 24) + c.inv(2, 1) / 4 + c.inv(3, 1) / 4),
        )
        .tends_to_unprinted(lim(&[(Pi2, 1, 12), (One, -17, 24)])),
        entry(
            "lemSumi1sqi4",
            Family::Rational,
            |n, _| rat(n, &[(1, 2), (4, 1)]),
            form!(|c| c.h(1, 2) / 3 - c.q(49, 108)
                + c.inv(2, 1) / 9
                + c.inv(3, 1) / 9
                + c.inv(4, 1) / 9),
        )
        .tends_to_unprinted(lim(&[(Pi2, 1, 18), (One, -49, 108)])),
        entry(
            "lemSumi1i2sq",
            Family::Rational,
            |n, _| rat(n, &[(1, 1), (2, 2)]),
            form!(|c| c.q(7, 4) - c.h(2, 2) - c.inv(2, 1)),
        )
        .tends_to(lim(&[(One, 7, 4), (Pi2, -1, 6)]), "0.105"),
        entry(
            "lemSumj2jm",
            Family::Rational,
            |n, p| SumSpec::rational(n, &[(2, 2), (p.m.unwrap_or(1), 1)]),
            form!(|c| match c.m() {
                1 => c.q(7, 4) - c.h(2, 2) - c.inv(2, 1),
                2 => c.h(2, 3) - c.q(9, 8),
                m => {
                    let d = m as i64 - 2;
                    c.h(2, 2) / d - c.q(5, 4 * d) + c.q(3, 2 * d * d) - c.hc(m, 1) / (d * d)
                        + c.tail(3, m as i64, 1) / (d * d)
                }
            }),
        )
        .params(ParamDomain::M { min: 1 })
        .limit_by(j2jm_limit),
        entry(
            "lemSumj2sqj4",
            Family::Rational,
            |n, _| rat(n, &[(2, 2), (4, 1)]),
            form!(|c| c.h(2, 2) / 2 - c.q(37, 48) + c.inv(3, 1) / 4 + c.inv(4, 1) / 4),
        )
        .tends_to_unprinted(lim(&[(Pi2, 1, 12), (One, -37, 48)])),
        entry(
            "lemSumi1i2cb",
            Family::Rational,
            |n, _| rat(n, &[(1, 1), (2, 3)]),
            form!(|c| c.q(23, 8) - c.h(2, 2) - c.h(2, 3) - c.inv(2, 1)),
        )
        .tends_to(lim(&[(One, 23, 8), (Pi2, -1, 6), (Zeta3, -1, 1)]), "0.028"),
        entry(
            "lemSumii1cb",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (1, 3)]),
            form!(|c| c.int(3) - c.h(1, 2) - c.h(1, 3) - c.inv(1, 1)),
        )
        .tends_to(lim(&[(One, 3, 1), (Pi2, -1, 6), (Zeta3, -1, 1)]), "0.153"),
        entry(
            "lemSumii2cb",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (2, 3)]),
            form!(|c| (c.q(17, 8) - c.h(2, 2) / 2 - c.h(2, 3) - c.inv(1, 1) / 4 - c.inv(2, 1) / 4) / 2),
        )
        .tends_to(lim(&[(One, 17, 16), (Pi2, -1, 24), (Zeta3, -1, 2)]), "0.050"),
        entry(
            "lemSumj1sqj2sq",
            Family::Rational,
            |n, _| rat(n, &[(1, 2), (2, 2)]),
            form!(|c| c.h(1, 2) * 2 - c.q(13, 4) + c.inv(2, 1) * 2 + c.inv(2, 2)),
        )
        .tends_to(lim(&[(Pi2, 1, 3), (One, -13, 4)]), "0.04"),
        entry(
            "lemSumj1quj2",
            Family::Rational,
            |n, _| rat(n, &[(1, 4), (2, 1)]),
            form!(|c| c.h(1, 2) - c.h(1, 3) + c.h(1, 4) - c.q(3, 2) + c.inv(2, 1)),
        )
        .tends_to(
            lim(&[(Pi4, 1, 90), (Zeta3, -1, 1), (Pi2, 1, 6), (One, -3, 2)]),
            "0.025",
        ),
        entry(
            "lemSumj1quj2sq",
            Family::Rational,
            |n, _| rat(n, &[(1, 4), (2, 2)]),
            form!(|c| c.h(1, 2) * 4 - c.h(1, 3) * 2 + c.h(1, 4) - c.q(21, 4)
                + c.inv(2, 1) * 4
                + c.inv(2, 2)),
        )
        .tends_to(
            lim(&[(Pi4, 1, 90), (Zeta3, -2, 1), (Pi2, 2, 3), (One, -21, 4)]),
            "0.008",
        ),
        entry(
            "lemSumj1sqj2qu",
            Family::Rational,
            |n, _| rat(n, &[(1, 2), (2, 4)]),
            form!(|c| c.h(1, 2) * 4 + c.h(2, 3) * 2 + c.h(2, 4) - c.q(161, 16)
                + c.inv(2, 1) * 4
                + c.inv(2, 2) * 3),
        )
        .tends_to(
            lim(&[(Pi4, 1, 90), (Zeta3, 2, 1), (Pi2, 2, 3), (One, -161, 16)]),
            "0.004",
        ),
        entry(
            "lemSumii1sqi2",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (1, 2), (2, 1)]),
            form!(|c| c.q(7, 4) - c.h(1, 2) - c.inv(1, 1) / 2 - c.inv(2, 1) / 2),
        )
        .tends_to(lim(&[(One, 7, 4), (Pi2, -1, 6)]), "0.105"),
        entry(
            "lemSumii1i2sq",
            Family::Rational,
            |n, _| rat(n, &[(0, 1), (1, 1), (2, 2)]),
            form!(|c| c.h(2, 2) / 2 - c.q(3, 4) - c.inv(1, 1) / 4 + c.inv(2, 1) * 3 / 4),
        )
        .tends_to(lim(&[(Pi2, 1, 12), (One, -3, 4)]), "0.072"),
    ]
}
