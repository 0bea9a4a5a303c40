use std::fmt;

use serde::{Deserialize, Serialize};

use super::constants::{constants, zeta};
use super::expr::{BasisConstant, LimitExpr};
use crate::arith::{HarmonicTable, Real, Scalar};
use crate::catalog::{FormulaEntry, Params};
use crate::error::{Error, Result};
use crate::oracle::{direct_eval, SumKind, SumSpec};

/// A-priori tail bound `C (ln N + 2)^b / N^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapBound {
    pub constant: u32,
    pub power_n: u32,
    pub power_log: u32,
}

impl GapBound {
    /// From the leading order of the summand: `a` is the denominator degree
    /// minus one, `b` the number of `H_{j,1}` factors in the numerator.
    pub fn for_spec(spec: &SumSpec) -> Option<GapBound> {
        let degree = spec.degree();
        if degree < 2 {
            return None;
        }
        let power_log = match (spec.kind, spec.order) {
            (SumKind::G, 1) | (SumKind::Mixed, _) => 1,
            (SumKind::V, 1) => 2,
            _ => 0,
        };
        Some(GapBound {
            constant: 4,
            power_n: degree - 1,
            power_log,
        })
    }

    pub fn at(&self, n: u64, bits: u32) -> Real {
        let log = Real::ln_int(n, bits) + 2;
        let num = log.powi(self.power_log) * i64::from(self.constant);
        num * Real::recip_pow(n, self.power_n, bits)
    }
}

impl fmt::Display for GapBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        match self.power_log {
            0 => {}
            1 => write!(f, "·(ln N + 2)")?,
            b => write!(f, "·(ln N + 2)^{b}")?,
        }
        match self.power_n {
            1 => write!(f, "/N"),
            a => write!(f, "/N^{a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub id: String,
    pub params: Params,
    pub limit: LimitExpr,
    pub limit_value: String,
    pub printed_value: Option<String>,
    pub precision_bits: u32,
    pub schedule: Vec<u64>,
    /// `|closed_form(n) - limit|` per schedule point.
    pub gaps: Vec<String>,
    pub gap_bound: String,
    pub final_gap: String,
    pub final_bound: String,
    pub monotone: bool,
    /// Limit rounded to the printed number of places equals the printed
    /// decimal (only when a decimal is printed).
    pub printed_matches: Option<bool>,
    pub verdict: Verdict,
}

const DIGITS: usize = 40;

fn schedule(n_final: u64) -> Vec<u64> {
    let mut points: Vec<u64> = std::iter::successors(Some(16u64), |n| n.checked_mul(2))
        .take_while(|&n| n < n_final)
        .collect();
    points.push(n_final);
    points
}

/// Whether `value` rounds to the printed decimal `printed` (same number of
/// places).
pub fn matches_printed(value: &Real, printed: &str) -> bool {
    let places = printed.split('.').nth(1).map_or(0, str::len);
    value.to_decimal_string(places) == printed
}

/// Walks the partial sums of a convergent entry up to `n_final` along a
/// geometric schedule and compares the final gap with the entry's bound.
pub fn check_convergence(
    entry: &FormulaEntry,
    params: Params,
    n_final: u64,
    bits: u32,
) -> Result<ConvergenceReport> {
    let params = entry.check_params(params)?;
    let limit = entry.limit(params);
    let expr = limit
        .finite()
        .ok_or_else(|| Error::Divergent(entry.id.to_string()))?
        .clone();
    let bound = entry
        .gap_bound(params)
        .ok_or_else(|| Error::Divergent(entry.id.to_string()))?;
    let target = expr.eval(bits);
    let reach = n_final + 8 + params.m.unwrap_or(0) + params.r.unwrap_or(0);
    let table = HarmonicTable::<Real>::build_in(reach, 6, bits)?;

    let points = schedule(n_final.max(1));
    let mut gaps = Vec::with_capacity(points.len());
    for &n in &points {
        let value: Real = entry.evaluate(n, params, &table)?;
        gaps.push((value - target.clone()).abs());
    }
    let monotone = gaps.windows(2).all(|w| w[1] <= w[0]);
    let last = gaps.last().cloned().unwrap_or_else(|| Real::from_int(0, bits));
    let final_bound = bound.at(n_final, bits);
    let printed_matches = entry.printed.map(|p| matches_printed(&target, p));
    let ok = monotone && last <= final_bound;
    Ok(ConvergenceReport {
        id: entry.id.to_string(),
        params,
        limit_value: target.to_decimal_string(DIGITS),
        limit: expr,
        printed_value: entry.printed.map(str::to_string),
        precision_bits: bits,
        schedule: points,
        gaps: gaps.iter().map(|g| g.to_decimal_string(DIGITS)).collect(),
        gap_bound: bound.to_string(),
        final_gap: last.to_decimal_string(DIGITS),
        final_bound: final_bound.to_decimal_string(DIGITS),
        monotone,
        printed_matches,
        verdict: Verdict::from_bool(ok),
    })
}

/// One of the classical infinite sums the catalog limits lean on.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KnownLimitRow {
    pub sum: String,
    pub limit: LimitExpr,
    pub n: u64,
    pub truncation: String,
    pub limit_value: String,
    pub gap: String,
    /// `C ln^2 N / N` with this row's `C`.
    pub bound_constant: u32,
    pub bound: String,
    pub verdict: Verdict,
}

fn known_sums() -> Vec<(SumSpec, LimitExpr, u32)> {
    use BasisConstant::*;
    vec![
        (
            SumSpec::g(1, 2, 0, 0, 0, 1),
            LimitExpr::from_terms(&[(Zeta3, 2, 1)]),
            1,
        ),
        (
            SumSpec::g(1, 3, 0, 0, 0, 1),
            LimitExpr::from_terms(&[(Pi4, 1, 72)]),
            1,
        ),
        (
            SumSpec::g(1, 4, 0, 0, 0, 1),
            LimitExpr::from_terms(&[(Zeta5, 3, 1), (Pi2Zeta3, -1, 6)]),
            1,
        ),
        (
            SumSpec::v(1, 2, 0, 0, 0, 1),
            LimitExpr::from_terms(&[(Pi4, 17, 360)]),
            2,
        ),
        (
            SumSpec::g(1, 4, 0, 0, 0, 2),
            LimitExpr::from_terms(&[(Zeta3Sq, 1, 1), (Pi6, -1, 2835)]),
            1,
        ),
    ]
}

/// Direct truncations at `n` of the five classical sums against their
/// closed-form limits.
pub fn known_limit_table(n: u64, bits: u32) -> Result<Vec<KnownLimitRow>> {
    let table = HarmonicTable::<Real>::build_in(n, 2, bits)?;
    let log = Real::ln_int(n, bits);
    known_sums()
        .into_iter()
        .map(|(spec, expr, c)| {
            let spec = spec.with_n(n);
            let value = direct_eval(&spec, &table)?;
            let target = expr.eval(bits);
            let gap = (value.clone() - target.clone()).abs();
            let bound = log.clone() * log.clone() * i64::from(c) / n as i64;
            Ok(KnownLimitRow {
                sum: format!("sum_{{j>=1}} {}", spec.summand_text()),
                verdict: Verdict::from_bool(gap <= bound),
                limit: expr,
                n,
                truncation: value.to_decimal_string(DIGITS),
                limit_value: target.to_decimal_string(DIGITS),
                gap: gap.to_decimal_string(DIGITS),
                bound_constant: c,
                bound: bound.to_decimal_string(DIGITS),
            })
        })
        .collect()
}

/// `|(ζ(3)^2 - 4π^6/2835 + ζ(6)) - (ζ(3)^2 - π^6/2835)|` with ζ(6) summed
/// independently of π, at `bits` bits. Both sides name the same constant,
/// so this should be below `2^(8 - bits)`.
pub fn zeta6_identity(bits: u32) -> Real {
    let work = bits + 16;
    let c = constants(work);
    let pi6 = c.pi.powi(6);
    let z3sq = c.zeta3.clone() * c.zeta3.clone();
    let long = z3sq.clone() - pi6.clone() * 4 / 2835 + zeta(6, work);
    let short = z3sq - pi6 / 2835;
    (long - short).abs().with_bits(bits)
}
