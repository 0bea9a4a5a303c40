//! Sums linear in `H_{j,1}`.

use super::{entry, form, lim, Family, FormulaEntry, ParamDomain};
use crate::limits::BasisConstant::*;
use crate::oracle::SumSpec;
use crate::recursion::{shift_value, ShiftFamily};

fn g1(n: u64, list: &'static [(u64, u32)]) -> SumSpec {
    SumSpec::linear(n, 1, list)
}

pub(super) fn entries() -> Vec<FormulaEntry> {
    vec![
        entry(
            "lemSumHj1",
            Family::LinearH1,
            |n, _| g1(n, &[]),
            form!(|c| c.nk(1) * c.h(0, 1) - c.nk(0)),
        )
        .grows("n ln n"),
        entry(
            "lemSumHii1",
            Family::LinearH1,
            |n, _| g1(n, &[(0, 1)]),
            form!(|c| (c.h(0, 1) * c.h(0, 1) + c.h(0, 2)) / 2),
        )
        .grows("½ ln² n"),
        entry(
            "lemSumHj1jm",
            Family::RecursiveInM,
            |n, p| ShiftFamily::H1OverJm.spec(n, p.m.unwrap_or(1)),
            form!(|c| shift_value(c, ShiftFamily::H1OverJm, c.m())),
        )
        .alias("lemSumHj1jmapp")
        .params(ParamDomain::M { min: 1 })
        .grows("½ ln² n"),
        entry(
            "lemSumHj1j2",
            Family::LinearH1,
            |n, _| g1(n, &[(2, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                (h.clone() * h.clone() - c.h(0, 2)) / 2 - 1 + h.clone() * c.inv(1, 1) + h * c.inv(2, 1)
                    + c.inv(1, 1)
            }),
        )
        .grows("½ ln² n"),
        entry(
            "lemSumHj1j3",
            Family::LinearH1,
            |n, _| g1(n, &[(3, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                (h.clone() * h.clone() - c.h(0, 2)) / 2 - c.q(21, 12)
                    + h * (c.inv(1, 1) + c.inv(2, 1) + c.inv(3, 1))
                    + c.inv(1, 1) * 3 / 2
                    + c.inv(2, 1) / 2
            }),
        )
        .grows("½ ln² n"),
        entry(
            "lemSumHj1j4",
            Family::LinearH1,
            |n, _| g1(n, &[(4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                (h.clone() * h.clone() - c.h(0, 2)) / 2 - c.q(85, 36)
                    + h * (c.inv(1, 1) + c.inv(2, 1) + c.inv(3, 1) + c.inv(4, 1))
                    + c.inv(1, 1) * 11 / 6
                    + c.inv(2, 1) * 5 / 6
                    + c.inv(3, 1) / 3
            }),
        )
        .grows("½ ln² n"),
        entry(
            "lemSumHiii1",
            Family::LinearH1,
            |n, _| g1(n, &[(0, 1), (1, 1)]),
            form!(|c| c.h(0, 2) - c.h(0, 1) * c.inv(1, 1)),
        )
        .tends_to(lim(&[(Pi2, 1, 6)]), "1.645"),
        entry(
            "lemSumHiii2",
            Family::LinearH1,
            |n, _| g1(n, &[(0, 1), (2, 1)]),
            form!(|c| (c.h(2, 2) + 1 - c.h(1, 1) * c.inv(1, 1) - c.h(2, 1) * c.inv(2, 1) - c.inv(2, 1)) / 2),
        )
        .tends_to(lim(&[(One, 1, 2), (Pi2, 1, 12)]), "1.322")
        .erratum("printed closed form is off by one in its H_{n,2} index; the derivation's final line is used"),
        entry(
            "lemSumHii1i2",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 1), (2, 1)]),
            form!(|c| c.int(1) - c.h(0, 1) * c.inv(2, 1) - c.inv(1, 1)),
        )
        .tends_to_unprinted(lim(&[(One, 1, 1)])),
        entry(
            "lemSumHj1j1j3",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 1), (3, 1)]),
            form!(|c| c.q(7, 8) - c.h(0, 1) * (c.inv(2, 1) + c.inv(3, 1)) / 2
                - c.inv(1, 1) * 3 / 4
                - c.inv(2, 1) / 4),
        )
        .tends_to_unprinted(lim(&[(One, 7, 8)])),
        entry(
            "lemSumHj1j1j4",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 1), (4, 1)]),
            form!(|c| c.q(85, 108) - c.h(0, 1) * (c.inv(2, 1) + c.inv(3, 1) + c.inv(4, 1)) / 3
                - c.inv(1, 1) * 11 / 18
                - c.inv(2, 1) * 5 / 18
                - c.inv(3, 1) / 9),
        )
        .tends_to_unprinted(lim(&[(One, 85, 108)])),
        entry(
            "lemSumHj1j2j4",
            Family::LinearH1,
            |n, _| g1(n, &[(2, 1), (4, 1)]),
            form!(|c| c.q(49, 72) - c.h(0, 1) * (c.inv(3, 1) + c.inv(4, 1)) / 2
                - c.inv(1, 1) * 5 / 12
                - c.inv(2, 1) * 5 / 12
                - c.inv(3, 1) / 6),
        )
        .tends_to_unprinted(lim(&[(One, 49, 72)])),
        entry(
            "lemSumHiip1sq",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 2)]),
            form!(|c| c.sum_h(1, 1, 2) - c.h(1, 3)),
        )
        .tends_to(lim(&[(Zeta3, 1, 1)]), "1.202"),
        entry(
            "lemSumHiip2sq",
            Family::LinearH1,
            |n, _| g1(n, &[(2, 2)]),
            form!(|c| c.sum_h(2, 1, 2) + c.h(2, 2) - c.h(2, 3) - 2 + c.inv(2, 1)),
        )
        .tends_to(lim(&[(Zeta3, 1, 1), (Pi2, 1, 6), (One, -2, 1)]), "0.847"),
        entry(
            "lemSumHii1i2sq",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 1), (2, 2)]),
            form!(|c| c.int(3) - c.h(2, 2) + c.h(2, 3) - c.sum_h(2, 1, 2)
                - c.h(1, 1) * c.inv(2, 1)
                - c.inv(2, 1) * 2),
        )
        .tends_to(lim(&[(One, 3, 1), (Pi2, -1, 6), (Zeta3, -1, 1)]), "0.153"),
        entry(
            "lemSumHiii1sq",
            Family::LinearH1,
            |n, _| g1(n, &[(0, 1), (1, 2)]),
            form!(|c| c.h(0, 2) + c.h(1, 3) - c.sum_h(1, 1, 2) - c.h(0, 1) * c.inv(1, 1)),
        )
        .tends_to(lim(&[(Pi2, 1, 6), (Zeta3, -1, 1)]), "0.443"),
        entry(
            "lemSumHiii2sq",
            Family::LinearH1,
            |n, _| g1(n, &[(0, 1), (2, 2)]),
            form!(|c| c.q(5, 4) + c.h(2, 3) / 2 - c.h(2, 2) / 4 - c.sum_h(2, 1, 2) / 2
                - c.h(1, 1) * c.inv(1, 1) / 4
                - c.h(2, 1) * c.inv(2, 1) / 4
                - c.inv(2, 1) * 3 / 4),
        )
        .tends_to(lim(&[(One, 5, 4), (Zeta3, -1, 2), (Pi2, -1, 24)]), "0.238"),
        entry(
            "lemSumHii1sqi2sq",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 2), (2, 2)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.sum_h(0, 1, 2) * 2 + c.h(0, 2) - c.h(0, 3) * 2 - 4
                    + h.clone() * c.inv(2, 1) * 2
                    + c.inv(1, 1) * 3
                    + h.clone() * c.inv(1, 2) * 2
                    + h * c.inv(2, 2)
                    + c.inv(1, 2)
            }),
        )
        .tends_to(lim(&[(Zeta3, 2, 1), (Pi2, 1, 6), (One, -4, 1)]), "0.049"),
        entry(
            "lemSumHiii1i2",
            Family::LinearH1,
            |n, _| g1(n, &[(0, 1), (1, 1), (2, 1)]),
            form!(|c| (c.h(0, 2) - 1 - c.h(0, 1) * c.inv(1, 1) + c.h(0, 1) * c.inv(2, 1) + c.inv(1, 1)) / 2),
        )
        .tends_to(lim(&[(Pi2, 1, 12), (One, -1, 2)]), "0.322"),
        entry(
            "lemSumHj1j1j2j3",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 1), (2, 1), (3, 1)]),
            form!(|c| c.q(1, 8) - c.h(0, 1) * c.inv(2, 1) / 2 + c.h(0, 1) * c.inv(3, 1) / 2
                - c.inv(1, 1) / 4
                + c.inv(2, 1) / 4),
        )
        .tends_to_unprinted(lim(&[(One, 1, 8)])),
        entry(
            "lemSumHj1j1j2j4",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 1), (2, 1), (4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.q(23, 216) - h.clone() * c.inv(2, 1) / 3
                    + h.clone() * c.inv(3, 1) / 6
                    + h * c.inv(4, 1) / 6
                    - c.inv(1, 1) * 7 / 36
                    + c.inv(2, 1) * 5 / 36
                    + c.inv(3, 1) / 18
            }),
        )
        .tends_to_unprinted(lim(&[(One, 23, 216)])),
        entry(
            "lemSumHj1j1sqj2j3",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 2), (2, 1), (3, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.sum_h(0, 1, 2) / 2 - c.h(0, 3) / 2 - c.q(9, 16)
                    + h.clone() * c.inv(2, 1) * 3 / 4
                    - h.clone() * c.inv(3, 1) / 4
                    + c.inv(1, 1) * 5 / 8
                    - c.inv(2, 1) / 8
                    + h * c.inv(1, 2) / 2
            }),
        )
        .tends_to(lim(&[(Zeta3, 1, 2), (One, -9, 16)]), "0.039"),
        entry(
            "lemSumHj1j1sqj2j4",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 2), (2, 1), (4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.sum_h(0, 1, 2) / 3 - c.h(0, 3) / 3 - c.q(239, 648)
                    + h.clone() * c.inv(2, 1) * 4 / 9
                    - h.clone() * c.inv(3, 1) / 18
                    - h.clone() * c.inv(4, 1) / 18
                    + c.inv(1, 1) * 43 / 108
                    - c.inv(2, 1) * 5 / 108
                    - c.inv(3, 1) / 54
                    + h * c.inv(1, 2) / 3
            }),
        )
        .tends_to(lim(&[(Zeta3, 1, 3), (One, -239, 648)]), "0.032"),
        entry(
            "lemSumHj1j1j2j3j4",
            Family::LinearH1,
            |n, _| g1(n, &[(1, 1), (2, 1), (3, 1), (4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.q(1, 54) - h.clone() * c.inv(2, 1) / 6 + h.clone() * c.inv(3, 1) / 3
                    - h * c.inv(4, 1) / 6
                    - c.inv(1, 1) / 18
                    + c.inv(2, 1) / 9
                    - c.inv(3, 1) / 18
            }),
        )
        .tends_to_unprinted(lim(&[(One, 1, 54)])),
    ]
}
