//! Sums linear in `H_{j,2}` (and the single `H_{j,3}` sum).

use super::{entry, form, lim, Family, FormulaEntry, ParamDomain};
use crate::limits::BasisConstant::*;
use crate::oracle::SumSpec;
use crate::recursion::{shift_value, ShiftFamily};

fn g2(n: u64, list: &'static [(u64, u32)]) -> SumSpec {
    SumSpec::linear(n, 2, list)
}

pub(super) fn entries() -> Vec<FormulaEntry> {
    vec![
        entry(
            "lemSumHi2",
            Family::LinearH2,
            |n, _| g2(n, &[]),
            form!(|c| c.nk(1) * c.h(0, 2) - c.h(0, 1)),
        )
        .grows("(π²/6) n"),
        entry(
            "lemSumHi2i",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 1)]),
            form!(|c| c.h(0, 1) * c.h(0, 2) + c.h(0, 3) - c.sum_h(0, 1, 2)),
        )
        .grows("(π²/6) ln n"),
        entry(
            "lemSumHi2i1",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1)]),
            form!(|c| c.h(0, 1) * c.h(0, 2) - c.sum_h(0, 1, 2) + c.h(0, 2) * c.inv(1, 1)),
        )
        .grows("(π²/6) ln n"),
        entry(
            "lemSumHj2jm",
            Family::RecursiveInM,
            |n, p| ShiftFamily::H2OverJm.spec(n, p.m.unwrap_or(1)),
            form!(|c| shift_value(c, ShiftFamily::H2OverJm, c.m())),
        )
        .alias("lemSumHj2jmapp")
        .params(ParamDomain::M { min: 1 })
        .grows("not stated"),
        entry(
            "lemSumHi2i2",
            Family::LinearH2,
            |n, _| g2(n, &[(2, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                c.h(0, 1) * h2.clone() - h2.clone() - c.sum_h(0, 1, 2) + 1
                    + h2.clone() * c.inv(1, 1)
                    + h2 * c.inv(2, 1)
                    - c.inv(1, 1)
            }),
        )
        .grows("(π²/6) ln n"),
        entry(
            "lemSumHj2j3",
            Family::LinearH2,
            |n, _| g2(n, &[(3, 1)]),
            form!(|c| (c.h(2, 1) - c.q(3, 2)) * c.h(2, 2) - c.sum_h(2, 1, 2) + c.q(11, 8)
                + c.h(1, 2) * c.inv(3, 1)
                - c.inv(2, 1) * 5 / 4
                - c.inv(3, 1) / 4
                + c.inv(2, 2) * 3 / 2),
        )
        .erratum("printed closed form repeats H_{n,2}/(n+3); the derivation's final line is used")
        .grows("(π²/6) ln n"),
        entry(
            "lemSumHj2j4",
            Family::LinearH2,
            |n, _| g2(n, &[(4, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                c.h(0, 1) * h2.clone() - h2.clone() * 11 / 6 - c.sum_h(0, 1, 2) + c.q(341, 216)
                    + h2 * (c.inv(1, 1) + c.inv(2, 1) + c.inv(3, 1) + c.inv(4, 1))
                    - c.inv(1, 1) * 49 / 36
                    - c.inv(2, 1) * 13 / 36
                    - c.inv(3, 1) / 9
            }),
        )
        .grows("(π²/6) ln n"),
        entry(
            "lemSumHi2ii1",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 1), (1, 1)]),
            form!(|c| c.h(0, 3) - c.h(0, 2) * c.inv(1, 1)),
        )
        .tends_to(lim(&[(Zeta3, 1, 1)]), "1.202"),
        entry(
            "lemSumHi2ii2",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 1), (2, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                (h2.clone() + c.h(0, 3) - 1 - h2.clone() * c.inv(1, 1) - h2 * c.inv(2, 1) + c.inv(1, 1)) / 2
            }),
        )
        .tends_to(lim(&[(Zeta3, 1, 2), (Pi2, 1, 12), (One, -1, 2)]), "0.923"),
        entry(
            "lemSumHi2i1i2",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (2, 1)]),
            form!(|c| c.h(0, 2) - 1 - c.h(0, 2) * c.inv(2, 1) + c.inv(1, 1)),
        )
        .tends_to(lim(&[(Pi2, 1, 6), (One, -1, 1)]), "0.645"),
        entry(
            "lemSumHj2j1j3",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (3, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * 3 / 4 - c.q(11, 16) - h2 * (c.inv(2, 1) + c.inv(3, 1)) / 2
                    + c.inv(1, 1) * 5 / 8
                    + c.inv(2, 1) / 8
            }),
        )
        .tends_to(lim(&[(Pi2, 1, 8), (One, -11, 16)]), "0.546"),
        entry(
            "lemSumHj2j1j4",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (4, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * 11 / 18 - c.q(341, 648)
                    - h2 * (c.inv(2, 1) + c.inv(3, 1) + c.inv(4, 1)) / 3
                    + c.inv(1, 1) * 49 / 108
                    + c.inv(2, 1) * 13 / 108
                    + c.inv(3, 1) / 27
            }),
        )
        .tends_to(lim(&[(Pi2, 11, 108), (One, -341, 648)]), "0.479"),
        entry(
            "lemSumHj2j2j4",
            Family::LinearH2,
            |n, _| g2(n, &[(2, 1), (4, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * 5 / 12 - c.q(125, 432) - h2 * (c.inv(3, 1) + c.inv(4, 1)) / 2
                    + c.inv(1, 1) * 13 / 72
                    + c.inv(2, 1) * 13 / 72
                    + c.inv(3, 1) / 18
            }),
        )
        .tends_to(lim(&[(Pi2, 5, 72), (One, -125, 432)]), "0.398")
        .erratum("printed decimal 0.398 disagrees with the stated limit, which is 0.39604"),
        entry(
            "lemSumHj2j3j4",
            Family::LinearH2,
            |n, _| g2(n, &[(3, 1), (4, 1)]),
            form!(|c| c.h(0, 2) / 3 - c.q(11, 54) - c.h(0, 2) * c.inv(4, 1)
                + (c.inv(1, 1) + c.inv(2, 1) + c.inv(3, 1)) / 9),
        )
        .tends_to(lim(&[(Pi2, 1, 18), (One, -11, 54)]), "0.345"),
        entry(
            "lemSumHi2p1ii1",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 1), (1, 1)]).with_h_shift(1),
            form!(|c| c.int(3) - c.h(1, 2) - c.h(1, 2) * c.inv(1, 1) - c.inv(1, 1)),
        )
        .tends_to(lim(&[(One, 3, 1), (Pi2, -1, 6)]), "1.355"),
        entry(
            "lemSumHi2p1ii2",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 1), (2, 1)]).with_h_shift(1),
            form!(|c| {
                let h2 = c.h(1, 2);
                (c.q(5, 2) + c.h(1, 3) - h2.clone() - h2.clone() * c.inv(1, 1) - h2 * c.inv(2, 1) - c.inv(1, 1)) / 2
            }),
        )
        .erratum("printed closed form mixes H_{n,k} and H_{n+1,k}; the derivation's final line is used")
        .tends_to(lim(&[(One, 5, 4), (Zeta3, 1, 2), (Pi2, -1, 12)]), "1.029"),
        entry(
            "lemSumHi2p1i1i2",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (2, 1)]).with_h_shift(1),
            form!(|c| c.h(1, 3) - c.q(1, 2) - c.h(1, 2) * c.inv(2, 1)),
        )
        .tends_to(lim(&[(Zeta3, 1, 1), (One, -1, 2)]), "0.702"),
        entry(
            "lemSumHi2p2ii1",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 1), (1, 1)]).with_h_shift(2),
            form!(|c| c.q(9, 4) - c.h(1, 2) / 2 - c.h(1, 2) * c.inv(1, 1) - c.inv(1, 1) * 5 / 4
                + c.inv(2, 1) * 3 / 4
                + c.inv(2, 2) / 2),
        )
        .tends_to(lim(&[(One, 9, 4), (Pi2, -1, 12)]), "1.428"),
        entry(
            "lemSumHi2p2ii2",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 1), (2, 1)]).with_h_shift(2),
            form!(|c| (c.q(37, 8) - c.h(1, 2) * 3 / 2 - c.h(1, 2) * c.inv(1, 1) - c.h(2, 2) * c.inv(2, 1)
                - c.inv(1, 1) * 5 / 4
                - c.inv(2, 1) / 4
                - c.inv(2, 2) / 2)
                / 2),
        )
        .tends_to(lim(&[(One, 37, 16), (Pi2, -1, 8)]), "1.079"),
        entry(
            "lemSumHi2p2i1i2",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (2, 1)]).with_h_shift(2),
            form!(|c| c.q(19, 8) - c.h(2, 2) - c.h(2, 2) * c.inv(2, 1) - c.inv(2, 1)),
        )
        .tends_to(lim(&[(One, 19, 8), (Pi2, -1, 6)]), "0.730"),
        entry(
            "lemSumHi2isq",
            Family::LinearH2,
            |n, _| g2(n, &[(0, 2)]),
            form!(|c| (c.h(0, 2) * c.h(0, 2) + c.h(0, 4)) / 2),
        )
        .tends_to(lim(&[(Pi4, 7, 360)]), "1.894"),
        entry(
            "lemSumHi2i1sq",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 2)]),
            form!(|c| (c.h(1, 2) * c.h(1, 2) - c.h(1, 4)) / 2),
        )
        .tends_to(lim(&[(Pi4, 1, 120)]), "0.812"),
        entry(
            "lemSumHi2i2sq",
            Family::LinearH2,
            |n, _| g2(n, &[(2, 2)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                (h2.clone() * h2.clone() - c.h(0, 4)) / 2 - h2.clone() * 2 + 3
                    + h2.clone() * c.inv(1, 2)
                    + h2 * c.inv(2, 2)
                    - c.inv(1, 1) * 2
                    - c.inv(1, 2)
            }),
        )
        .tends_to(lim(&[(One, 3, 1), (Pi4, 1, 120), (Pi2, -1, 3)]), "0.522"),
        entry(
            "lemSumHj2j1j2j3",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (2, 1), (3, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() / 4 - c.q(5, 16) - h2.clone() * c.inv(2, 1) / 2 + h2 * c.inv(3, 1) / 2
                    + c.inv(1, 1) * 3 / 8
                    - c.inv(2, 1) / 8
            }),
        )
        .tends_to(lim(&[(Pi2, 1, 24), (One, -5, 16)]), "0.099"),
        entry(
            "lemSumHj2j1j2j4",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (2, 1), (4, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * 7 / 36 - c.q(307, 1296) - h2.clone() * c.inv(2, 1) / 3
                    + h2.clone() * c.inv(3, 1) / 6
                    + h2 * c.inv(4, 1) / 6
                    + c.inv(1, 1) * 59 / 216
                    - c.inv(2, 1) * 13 / 216
                    - c.inv(3, 1) / 54
            }),
        )
        .tends_to(lim(&[(Pi2, 7, 216), (One, -307, 1296)]), "0.083"),
        entry(
            "lemSumHi2i1sqi2",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 2), (2, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * h2.clone() / 2 - h2.clone() - c.h(0, 4) / 2 + 1 + h2.clone() * c.inv(2, 1)
                    - c.inv(1, 1)
                    + h2 * c.inv(1, 2)
            }),
        )
        .alias("lemSumHi2i1sqi2app")
        .tends_to(lim(&[(Pi4, 1, 120), (Pi2, -1, 6), (One, 1, 1)]), "0.167"),
        entry(
            "lemSumHi2i1i2sq",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 1), (2, 2)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * 3 - h2.clone() * h2.clone() / 2 + c.h(0, 4) / 2 - 4 - h2.clone() * c.inv(2, 1)
                    + c.inv(1, 1) * 3
                    - h2.clone() * c.inv(1, 2)
                    - h2 * c.inv(2, 2)
                    + c.inv(1, 2)
            }),
        )
        .alias("lemSumHi2i1i2sqapp")
        .tends_to(lim(&[(Pi2, 1, 2), (Pi4, -1, 120), (One, -4, 1)]), "0.123"),
        entry(
            "lemSumHi2i1sqi2sq",
            Family::LinearH2,
            |n, _| g2(n, &[(1, 2), (2, 2)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * h2.clone() - h2.clone() * 4 - c.h(0, 4) + 5
                    + h2.clone() * c.inv(2, 1) * 2
                    + h2.clone() * c.inv(1, 2) * 2
                    + h2 * c.inv(2, 2)
                    - c.inv(1, 1) * 4
                    - c.inv(1, 2)
            }),
        )
        .alias("lemSumHi2i1sqi2sqapp")
        .tends_to(lim(&[(Pi4, 1, 60), (Pi2, -2, 3), (One, 5, 1)]), "0.044"),
        entry(
            "lemSumHi3i",
            Family::LinearH2,
            |n, _| SumSpec::linear(n, 3, &[(0, 1)]),
            form!(|c| c.h(0, 1) * c.h(0, 3) + c.h(0, 4) - c.sum_h(0, 1, 3)),
        )
        .grows("ζ(3) ln n"),
    ]
}
