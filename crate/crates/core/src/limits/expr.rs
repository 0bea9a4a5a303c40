use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use super::constants::constants;
use crate::arith::{Rational, Real};

/// Basis of transcendental constants every finite limit is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BasisConstant {
    One,
    Pi2,
    Pi4,
    Pi6,
    Zeta3,
    Zeta5,
    Zeta3Sq,
    Pi2Zeta3,
}

impl BasisConstant {
    pub const ALL: [BasisConstant; 8] = [
        BasisConstant::One,
        BasisConstant::Pi2,
        BasisConstant::Pi4,
        BasisConstant::Pi6,
        BasisConstant::Zeta3,
        BasisConstant::Zeta5,
        BasisConstant::Zeta3Sq,
        BasisConstant::Pi2Zeta3,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BasisConstant::One => "1",
            BasisConstant::Pi2 => "π²",
            BasisConstant::Pi4 => "π⁴",
            BasisConstant::Pi6 => "π⁶",
            BasisConstant::Zeta3 => "ζ(3)",
            BasisConstant::Zeta5 => "ζ(5)",
            BasisConstant::Zeta3Sq => "ζ(3)²",
            BasisConstant::Pi2Zeta3 => "π²ζ(3)",
        }
    }

    /// Numeric value, within a few ulps at `bits`.
    pub fn value(self, bits: u32) -> Real {
        let c = constants(bits + 16);
        let pi2 = c.pi.clone() * c.pi.clone();
        let v = match self {
            BasisConstant::One => Real::from_int(1, bits + 16),
            BasisConstant::Pi2 => pi2,
            BasisConstant::Pi4 => pi2.clone() * pi2,
            BasisConstant::Pi6 => pi2.clone() * pi2.clone() * pi2,
            BasisConstant::Zeta3 => c.zeta3.clone(),
            BasisConstant::Zeta5 => c.zeta5.clone(),
            BasisConstant::Zeta3Sq => c.zeta3.clone() * c.zeta3.clone(),
            BasisConstant::Pi2Zeta3 => pi2 * c.zeta3.clone(),
        };
        v.with_bits(bits)
    }
}

/// Exact rational combination of [`BasisConstant`]s. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LimitExpr {
    coefficients: BTreeMap<BasisConstant, Rational>,
}

impl LimitExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(value: Rational) -> Self {
        Self::zero().plus(BasisConstant::One, value)
    }

    /// Build from `(constant, numerator, denominator)` triples.
    pub fn from_terms(terms: &[(BasisConstant, i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, num, den)| {
            acc.plus(c, Rational::ratio(num, den))
        })
    }

    pub fn plus(mut self, constant: BasisConstant, coefficient: Rational) -> Self {
        let entry = self
            .coefficients
            .entry(constant)
            .or_insert_with(Rational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.coefficients.remove(&constant);
        }
        self
    }

    pub fn coefficient(&self, constant: BasisConstant) -> Rational {
        self.coefficients
            .get(&constant)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisConstant, &Rational)> {
        self.coefficients.iter().map(|(c, r)| (*c, r))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.terms()
            .fold(Self::zero(), |acc, (c, r)| acc.plus(c, r * factor))
    }

    /// Numeric value with absolute error below 2^(8 - bits).
    pub fn eval(&self, bits: u32) -> Real {
        let work = bits + 16;
        let sum = self.terms().fold(Real::from_int(0, work), |acc, (c, r)| {
            acc + c.value(work) * Real::from_rational(r, work)
        });
        sum.with_bits(bits)
    }
}

impl Add for LimitExpr {
    type Output = LimitExpr;
    fn add(self, rhs: LimitExpr) -> LimitExpr {
        rhs.terms()
            .fold(self, |acc, (c, r)| acc.plus(c, r.clone()))
    }
}

impl Sub for LimitExpr {
    type Output = LimitExpr;
    fn sub(self, rhs: LimitExpr) -> LimitExpr {
        rhs.terms()
            .fold(self, |acc, (c, r)| acc.plus(c, -r.clone()))
    }
}

impl Mul<&Rational> for LimitExpr {
    type Output = LimitExpr;
    fn mul(self, rhs: &Rational) -> LimitExpr {
        self.scale(rhs)
    }
}

impl fmt::Display for LimitExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // constants first, largest first, then the rational part
        let mut order: Vec<_> = self.terms().collect();
        order.sort_by_key(|(c, _)| std::cmp::Reverse(*c));
        for (i, (c, r)) in order.into_iter().enumerate() {
            let neg = r.is_negative();
            let mag = r.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (c, mag == 1) {
                (BasisConstant::One, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(c.symbol())?,
                (_, false) if mag.is_integer() => write!(f, "{mag}{}", c.symbol())?,
                _ => write!(f, "({mag}){}", c.symbol())?,
            }
        }
        Ok(())
    }
}

/// Leading asymptotic term of a divergent sum, kept as metadata only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GrowthClass(pub String);

impl GrowthClass {
    pub fn new(description: &str) -> Self {
        GrowthClass(description.to_string())
    }

    pub fn description(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// What is known about `n -> infinity`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Limit {
    Finite(LimitExpr),
    Divergent(GrowthClass),
    /// Convergent, but no closed limit is given for this instance.
    Unstated,
}

impl Limit {
    pub fn finite(&self) -> Option<&LimitExpr> {
        match self {
            Limit::Finite(e) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Finite(e) => write!(f, "{e}"),
            Limit::Divergent(g) => write!(f, "DIVERGENT({g})"),
            Limit::Unstated => f.write_str("UNSTATED"),
        }
    }
}
