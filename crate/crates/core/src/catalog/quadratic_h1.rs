//! Sums quadratic in `H_{j,1}`.

use super::{entry, form, lim, Family, FormulaEntry, ParamDomain, Params};
use crate::limits::{BasisConstant::*, Limit};
use crate::oracle::SumSpec;
use crate::recursion::{shift_value, ShiftFamily};

fn v1(n: u64, list: &'static [(u64, u32)]) -> SumSpec {
    SumSpec::quadratic(n, 1, list)
}

fn hsq_jm_sq_limit(p: Params) -> Limit {
    match p.m.unwrap_or(1) {
        1 => Limit::Finite(lim(&[(Pi4, 11, 360)])),
        _ => Limit::Unstated,
    }
}

pub(super) fn entries() -> Vec<FormulaEntry> {
    vec![
        entry(
            "lemSumHj1sq",
            Family::QuadraticH1,
            |n, _| v1(n, &[]),
            form!(|c| {
                let h = c.h(0, 1);
                c.nk(1) * h.clone() * h.clone() - (c.nk(0) * 2 + 1) * h + c.nk(0) * 2
            }),
        )
        .grows("n ln² n"),
        entry(
            "lemSumHj1sqj",
            Family::QuadraticH1,
            |n, _| v1(n, &[(0, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                h.clone() * h.clone() * h / 3 + c.sum_h(0, 1, 2) - c.h(0, 3) / 3
            }),
        )
        .grows("⅓ ln³ n"),
        entry(
            "lemSumHj1sqjm",
            Family::RecursiveInM,
            |n, p| ShiftFamily::H1sqOverJm.spec(n, p.m.unwrap_or(1)),
            form!(|c| shift_value(c, ShiftFamily::H1sqOverJm, c.m())),
        )
        .alias("lemSumHj1sqjmapp")
        .params(ParamDomain::M { min: 1 })
        .grows("⅓ ln³ n"),
        entry(
            "lemSumHj1sqj2",
            Family::QuadraticH1,
            |n, _| v1(n, &[(2, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                hh.clone() * h.clone() / 3 - c.sum_h(0, 1, 2) + c.h(0, 3) * 2 / 3 - c.h(0, 2) - 1
                    + hh.clone() * c.inv(1, 1)
                    + hh * c.inv(2, 1)
                    + h * c.inv(1, 1) * 2
                    + c.inv(1, 1)
            }),
        )
        .grows("⅓ ln³ n"),
        entry(
            "lemSumHj1sqj3",
            Family::QuadraticH1,
            |n, _| v1(n, &[(3, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                hh.clone() * h.clone() / 3 - c.sum_h(0, 1, 2) + c.h(0, 3) * 2 / 3 - c.h(0, 2) * 3 / 2
                    - c.q(19, 8)
                    + hh * (c.inv(1, 1) + c.inv(2, 1) + c.inv(3, 1))
                    + h.clone() * c.inv(1, 1) * 3
                    + h * c.inv(2, 1)
                    + c.inv(1, 1) * 9 / 4
                    + c.inv(2, 1) / 4
            }),
        )
        .grows("⅓ ln³ n"),
        entry(
            "lemSumHj1sqj4",
            Family::QuadraticH1,
            |n, _| v1(n, &[(4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                hh.clone() * h.clone() / 3 - c.sum_h(0, 1, 2) + c.h(0, 3) * 2 / 3 - c.h(0, 2) * 11 / 6
                    - c.q(809, 216)
                    + hh * (c.inv(1, 1) + c.inv(2, 1) + c.inv(3, 1) + c.inv(4, 1))
                    + h.clone() * c.inv(1, 1) * 11 / 3
                    + h.clone() * c.inv(2, 1) * 5 / 3
                    + h * c.inv(3, 1) * 2 / 3
                    + c.inv(1, 1) * 121 / 36
                    + c.inv(2, 1) * 25 / 36
                    + c.inv(3, 1) / 9
            }),
        )
        .grows("⅓ ln³ n"),
        entry(
            "lemSumHisqi1i2",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 1), (2, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.h(0, 2) + 1 - h.clone() * c.inv(1, 1) * 2 - c.inv(1, 1) - h.clone() * h * c.inv(2, 1)
            }),
        )
        .alias("lemSumHisqi1i2app")
        .tends_to(lim(&[(Pi2, 1, 6), (One, 1, 1)]), "2.645"),
        entry(
            "lemSumHj1sqj1j3",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 1), (3, 1)]),
            form!(|c| {
                let h = c.h(1, 1);
                (c.h(1, 2) * 3 / 2 + c.q(19, 8) - h.clone() * h.clone() * (c.inv(2, 1) + c.inv(3, 1))
                    - h.clone() * c.inv(2, 1) * 3
                    - h * c.inv(3, 1)
                    - c.inv(2, 1) * 9 / 4
                    - c.inv(3, 1) / 4)
                    / 2
            }),
        )
        .erratum("printed closed form is not the derivation's final line; the latter is used")
        .tends_to(lim(&[(Pi2, 1, 8), (One, 19, 16)]), "2.421"),
        entry(
            "lemSumHj1sqj1j4",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 1), (4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                c.h(0, 2) * 11 / 18 + c.q(809, 648) - hh * (c.inv(2, 1) + c.inv(3, 1) + c.inv(4, 1)) / 3
                    - h.clone() * c.inv(1, 1) * 11 / 9
                    - h.clone() * c.inv(2, 1) * 5 / 9
                    - h * c.inv(3, 1) * 2 / 9
                    - c.inv(1, 1) * 121 / 108
                    - c.inv(2, 1) * 25 / 108
                    - c.inv(3, 1) / 27
            }),
        )
        .erratum("printed closed form has H_{1,1} where H_{n,1} is meant")
        .tends_to(lim(&[(Pi2, 11, 108), (One, 809, 648)]), "2.254"),
        entry(
            "lemSumHj1sqj2j4",
            Family::QuadraticH1,
            |n, _| v1(n, &[(2, 1), (4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                c.h(0, 2) * 5 / 12 + c.q(593, 432) - hh * (c.inv(3, 1) + c.inv(4, 1)) / 2
                    - h.clone() * (c.inv(1, 1) + c.inv(2, 1)) * 5 / 6
                    - h * c.inv(3, 1) / 3
                    - c.inv(1, 1) * 85 / 72
                    - c.inv(2, 1) * 25 / 72
                    - c.inv(3, 1) / 18
            }),
        )
        .tends_to(lim(&[(Pi2, 5, 72), (One, 593, 432)]), "2.058"),
        entry(
            "lemSumHj1sqj3j4",
            Family::QuadraticH1,
            |n, _| v1(n, &[(3, 1), (4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.h(0, 2) / 3 + c.q(37, 27) - h.clone() * h.clone() * c.inv(4, 1)
                    - h * (c.inv(1, 1) + c.inv(2, 1) + c.inv(3, 1)) * 2 / 3
                    - c.inv(1, 1) * 10 / 9
                    - c.inv(2, 1) * 4 / 9
                    - c.inv(3, 1) / 9
            }),
        )
        .tends_to(lim(&[(Pi2, 1, 18), (One, 37, 27)]), "1.919"),
        entry(
            "lemSumHisqip1sqapp",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 2)]),
            form!(|c| {
                let h = c.h(0, 1);
                c.sum_hsq(0, 1, 2) - c.sum_h(0, 1, 3) * 2 + c.h(0, 4) + h.clone() * h * c.inv(1, 2)
            }),
        )
        .tends_to(lim(&[(Pi4, 11, 360)]), "2.976"),
        entry(
            "lemSumHisqip2sq",
            Family::QuadraticH1,
            |n, _| v1(n, &[(2, 2)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                c.sum_hsq(0, 1, 2) + c.sum_h(0, 1, 2) * 2 - c.sum_h(0, 1, 3) * 2 - c.h(0, 3) * 2 + c.h(0, 4)
                    - 3
                    + h.clone() * c.inv(1, 1) * 2
                    + c.inv(1, 1) * 2
                    + hh.clone() * c.inv(1, 2)
                    + hh * c.inv(2, 2)
                    + h * c.inv(1, 2) * 2
                    + c.inv(1, 2)
            }),
        )
        .erratum("printed closed form has 1/(n+2)^2 where 1/(n+1)^2 is meant")
        .tends_to(lim(&[(Pi4, 11, 360), (Zeta3, 2, 1), (One, -3, 1)]), "2.381"),
        entry(
            "lemSumHj1sqjmsq",
            Family::RecursiveInM,
            |n, p| ShiftFamily::H1sqOverJmSq.spec(n, p.m.unwrap_or(1)),
            form!(|c| shift_value(c, ShiftFamily::H1sqOverJmSq, c.m())),
        )
        .alias("lemSumHj1sqjmsqapp")
        .params(ParamDomain::M { min: 1 })
        .limit_by(hsq_jm_sq_limit),
        entry(
            "lemSumHisqi1i2sq",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 1), (2, 2)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                c.h(0, 2) + c.h(0, 3) * 2 - c.h(0, 4) + 4 - c.sum_hsq(0, 1, 2) - c.sum_h(0, 1, 2) * 2
                    + c.sum_h(0, 1, 3) * 2
                    - hh.clone() * c.inv(2, 1)
                    - h.clone() * c.inv(1, 1) * 4
                    - c.inv(1, 1) * 3
                    - h * c.inv(1, 2) * 2
                    - hh.clone() * c.inv(1, 2)
                    - hh * c.inv(2, 2)
                    - c.inv(1, 2)
            }),
        )
        .tends_to(lim(&[(One, 4, 1), (Pi2, 1, 6), (Zeta3, -2, 1), (Pi4, -11, 360)]), "0.264"),
        entry(
            "lemSumHisqi1sqi2sq",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 2), (2, 2)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                c.sum_hsq(0, 1, 2) * 2 + c.sum_h(0, 1, 2) * 2 - c.sum_h(0, 1, 3) * 4 - c.h(0, 2) * 2
                    - c.h(0, 3) * 2
                    + c.h(0, 4) * 2
                    - 5
                    + hh.clone() * c.inv(2, 1) * 2
                    + h.clone() * c.inv(1, 1) * 6
                    + hh.clone() * c.inv(1, 2) * 2
                    + hh * c.inv(2, 2)
                    + h * c.inv(1, 2) * 2
                    + c.inv(1, 1) * 4
                    + c.inv(1, 2)
            }),
        )
        .tends_to(lim(&[(Pi4, 11, 180), (Zeta3, 2, 1), (Pi2, -1, 3), (One, -5, 1)]), "0.067"),
        entry(
            "lemSumHj1sqj1j2j3",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 1), (2, 1), (3, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                c.h(0, 2) / 4 - c.q(3, 16) - hh.clone() * c.inv(2, 1) / 2 + hh * c.inv(3, 1) / 2
                    - h.clone() * c.inv(1, 1) / 2
                    + h * c.inv(2, 1) / 2
                    + c.inv(1, 1) / 8
                    + c.inv(2, 1) / 8
            }),
        )
        .tends_to(lim(&[(Pi2, 1, 24), (One, -3, 16)]), "0.224"),
        entry(
            "lemSumHj1sqj1j2j4",
            Family::QuadraticH1,
            |n, _| v1(n, &[(1, 1), (2, 1), (4, 1)]),
            form!(|c| {
                let h = c.h(0, 1);
                let hh = h.clone() * h.clone();
                c.h(0, 2) * 7 / 36 - c.q(161, 1296) - hh.clone() * c.inv(2, 1) / 3
                    + hh.clone() * c.inv(3, 1) / 6
                    + hh * c.inv(4, 1) / 6
                    - h.clone() * c.inv(1, 1) * 7 / 18
                    + h.clone() * c.inv(2, 1) * 5 / 18
                    + h * c.inv(3, 1) / 9
                    + c.inv(1, 1) * 13 / 216
                    + c.inv(2, 1) * 25 / 216
                    + c.inv(3, 1) / 54
            }),
        )
        .tends_to(lim(&[(Pi2, 7, 216), (One, -161, 1296)]), "0.196"),
    ]
}
