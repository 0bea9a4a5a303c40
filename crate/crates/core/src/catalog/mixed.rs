//! Sums of the product `H_{j+s,1} H_{j+s,2}` over `j`.

use super::{entry, form, Family, FormulaEntry};
use crate::oracle::SumSpec;

pub(super) fn entries() -> Vec<FormulaEntry> {
    vec![
        entry(
            "lemSumHi1Hi2i",
            Family::Mixed,
            |n, _| SumSpec::mixed(n, 0),
            form!(|c| {
                let h = c.h(0, 1);
                (h.clone() * h * c.h(0, 2) - c.h(0, 4) + c.sum_h(0, 2, 2) + c.sum_h(0, 1, 3) * 2
                    - c.sum_hsq(0, 1, 2))
                    / 2
            }),
        )
        .grows("(π²/12) ln² n"),
        entry(
            "lemSumHi1p1Hi2p1i",
            Family::Mixed,
            |n, _| SumSpec::mixed(n, 1),
            form!(|c| {
                let (h, h2) = (c.h(0, 1), c.h(0, 2));
                h.clone() * h.clone() * h2.clone() / 2 + c.h(0, 3) + c.sum_h(0, 2, 2) / 2 + c.sum_h(0, 1, 3) + 3
                    - c.sum_hsq(0, 1, 2) / 2
                    - c.sum_h(1, 1, 2)
                    - c.h(0, 4) / 2
                    - h * c.inv(1, 1)
                    - h2 * c.inv(1, 1)
                    - c.inv(1, 1)
                    - c.inv(1, 2)
            }),
        )
        .grows("(π²/12) ln² n"),
        entry(
            "lemSumHi1p2Hi2p2i",
            Family::Mixed,
            |n, _| SumSpec::mixed(n, 2),
            form!(|c| {
                let (h, h2) = (c.h(0, 1), c.h(0, 2));
                h.clone() * h.clone() * h2.clone() / 2 + c.sum_h(0, 2, 2) / 2 + c.sum_h(0, 1, 3)
                    - c.sum_hsq(0, 1, 2) / 2
                    - c.sum_h(0, 1, 2) * 3 / 2
                    - h2.clone() / 2
                    + c.h(0, 3) * 3 / 2
                    - c.h(0, 4) / 2
                    + c.q(93, 16)
                    - h.clone() * c.inv(1, 1) * 5 / 4
                    - h.clone() * c.inv(2, 1) / 4
                    - h2.clone() * c.inv(1, 1) * 3 / 2
                    - h2 * c.inv(2, 1) / 2
                    - c.inv(1, 1) * 17 / 8
                    + c.inv(2, 1) / 8
                    - h.clone() * c.inv(1, 2) * 3 / 2
                    - h * c.inv(2, 2) / 2
                    - c.inv(1, 2) * 9 / 4
                    + c.inv(2, 2) / 4
                    - c.inv(1, 3) * 3 / 2
                    - c.inv(2, 3) / 2
            }),
        )
        .grows("(π²/12) ln² n"),
    ]
}
