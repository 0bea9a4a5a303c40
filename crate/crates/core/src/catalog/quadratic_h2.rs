//! Sums quadratic in `H_{j,2}`.

use super::{entry, form, lim, Family, FormulaEntry, ParamDomain, Params};
use crate::limits::{BasisConstant::*, Limit};
use crate::oracle::SumSpec;
use crate::recursion::{shift_value, ShiftFamily};

fn v2(n: u64, list: &'static [(u64, u32)]) -> SumSpec {
    SumSpec::quadratic(n, 2, list)
}

fn h2sq_jm_sq_limit(p: Params) -> Limit {
    match p.m.unwrap_or(1) {
        1 => Limit::Finite(lim(&[(Pi6, 59, 22680), (Zeta3Sq, -1, 1)])),
        _ => Limit::Unstated,
    }
}

pub(super) fn entries() -> Vec<FormulaEntry> {
    vec![
        entry(
            "lemSumHi2sqi1app",
            Family::QuadraticH2,
            |n, _| v2(n, &[(1, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                c.sum_hsq(0, 2, 1) - c.sum_h(0, 2, 3) * 2 + c.h(0, 5) + h2.clone() * h2 * c.inv(1, 1)
            }),
        )
        .grows("ln n"),
        entry(
            "lemSumHi2sqi2",
            Family::QuadraticH2,
            |n, _| v2(n, &[(2, 1)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                let hh = h2.clone() * h2.clone();
                c.sum_hsq(0, 2, 1) - c.sum_h(0, 2, 3) * 2 - hh.clone() + h2.clone() + c.h(0, 3) + c.h(0, 5)
                    - 1
                    + hh.clone() * c.inv(1, 1)
                    + hh * c.inv(2, 1)
                    - h2 * c.inv(1, 1) * 2
                    + c.inv(1, 1)
            }),
        )
        .grows("ln n"),
        entry(
            "lemSumHi2sqim",
            Family::RecursiveInM,
            |n, p| ShiftFamily::H2sqOverJm.spec(n, p.m.unwrap_or(1)),
            form!(|c| shift_value(c, ShiftFamily::H2sqOverJm, c.m())),
        )
        .alias("lemSumHi2sqimapp")
        .params(ParamDomain::M { min: 1 })
        .grows("ln n"),
        entry(
            "lemSumHi2sqi1i2",
            Family::QuadraticH2,
            |n, _| v2(n, &[(1, 1), (2, 1)]),
            form!(|c| {
                let (a, b) = (c.h(1, 2), c.h(2, 2));
                a.clone() * a.clone() - a.clone() - c.h(1, 3) + 1 - b.clone() * b.clone() * c.inv(2, 1)
                    + a * c.inv(2, 1) * 2
                    - c.inv(2, 1)
                    + b * c.inv(2, 3) * 2
                    - c.inv(2, 5)
            }),
        )
        .alias("lemSumHi2sqi1i2app")
        .tends_to(lim(&[(Pi4, 1, 36), (Pi2, -1, 6), (Zeta3, -1, 1), (One, 1, 1)]), "0.859"),
        entry(
            "lemSumHi2sqisq",
            Family::QuadraticH2,
            |n, _| v2(n, &[(0, 2)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                h2.clone() * h2.clone() * h2 / 3 + c.sum_h(0, 2, 4) - c.h(0, 6) / 3
            }),
        )
        .alias("lemSumHi2sqisqapp")
        .tends_to(lim(&[(Zeta3Sq, 1, 1), (Pi6, 19, 22680)]), "2.250"),
        entry(
            "lemSumHi2sqip1sq",
            Family::QuadraticH2,
            |n, _| v2(n, &[(1, 2)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                let hh = h2.clone() * h2.clone();
                hh.clone() * h2 / 3 + c.h(0, 6) * 2 / 3 - c.sum_h(0, 2, 4) + hh * c.inv(1, 2)
            }),
        )
        .tends_to(lim(&[(Pi6, 59, 22680), (Zeta3Sq, -1, 1)]), "1.056"),
        entry(
            "lemSumHi2sqip2sq",
            Family::QuadraticH2,
            |n, _| v2(n, &[(2, 2)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                let hh = h2.clone() * h2.clone();
                hh.clone() * h2.clone() / 3 - hh.clone() * 2 + h2.clone() * 4 + c.h(0, 3) * 2 + c.h(0, 4)
                    + c.h(0, 6) * 2 / 3
                    - c.sum_h(0, 2, 4)
                    - 5
                    - h2.clone() * c.inv(1, 1) * 4
                    + c.inv(1, 1) * 4
                    + hh.clone() * c.inv(1, 2)
                    + hh * c.inv(2, 2)
                    - h2 * c.inv(1, 2) * 2
                    + c.inv(1, 2)
            }),
        )
        .tends_to(
            lim(&[(Pi6, 59, 22680), (Pi4, -2, 45), (Pi2, 2, 3), (Zeta3, 2, 1), (Zeta3Sq, -1, 1), (One, -5, 1)]),
            "0.711",
        ),
        entry(
            "lemSumHi2sqipmsq",
            Family::RecursiveInM,
            |n, p| ShiftFamily::H2sqOverJmSq.spec(n, p.m.unwrap_or(1)),
            form!(|c| shift_value(c, ShiftFamily::H2sqOverJmSq, c.m())),
        )
        .params(ParamDomain::M { min: 1 })
        .limit_by(h2sq_jm_sq_limit),
        entry(
            "lemSumHi2sqip1sqip2sq",
            Family::QuadraticH2,
            |n, _| v2(n, &[(1, 2), (2, 2)]),
            form!(|c| {
                let h2 = c.h(0, 2);
                let hh = h2.clone() * h2.clone();
                hh.clone() * h2.clone() * 2 / 3 - hh.clone() * 4 + h2.clone() * 6 + c.h(0, 3) * 4 + c.h(0, 4)
                    + c.h(0, 6) * 4 / 3
                    - c.sum_h(0, 2, 4) * 2
                    - 7
                    + hh.clone() * c.inv(2, 1) * 2
                    - h2.clone() * c.inv(1, 1) * 8
                    + c.inv(1, 1) * 6
                    + hh.clone() * c.inv(1, 2) * 2
                    + hh * c.inv(2, 2)
                    - h2 * c.inv(1, 2) * 2
                    + c.inv(1, 2)
            }),
        )
        .tends_to(
            lim(&[(Pi6, 59, 11340), (Pi4, -1, 10), (Pi2, 1, 1), (Zeta3Sq, -2, 1), (Zeta3, 4, 1), (One, -7, 1)]),
            "0.049",
        ),
    ]
}
