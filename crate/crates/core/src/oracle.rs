//! Literal direct summation of every sum family. Ground truth for the
//! catalog and the recursive evaluators; it never applies an identity.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{HarmonicTable, Scalar};
use crate::error::{Error, Result};

/// Shape of the summand numerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SumKind {
    /// `H_{j+h,m}`
    G,
    /// `H_{j+h,m}^2`
    V,
    /// `1` (the purely rational building blocks; two or more factors)
    R,
    /// `H_{j+h,1} H_{j+h,2}`
    Mixed,
}

/// One denominator factor `(j + shift)^power`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub shift: u64,
    pub power: u32,
}

/// `sum_{j=1}^{n} numerator(j) / prod (j + shift_i)^power_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SumSpec {
    pub kind: SumKind,
    pub n: u64,
    /// Harmonic order `m` of the numerator (ignored by `R` and `Mixed`).
    pub order: u32,
    /// Index shift of the harmonic numbers in the numerator.
    #[serde(default)]
    pub h_shift: u64,
    pub factors: Vec<Factor>,
}

fn factors(list: &[(u64, u32)]) -> Vec<Factor> {
    list.iter()
        .map(|&(shift, power)| Factor { shift, power })
        .collect()
}

impl SumSpec {
    pub fn new(kind: SumKind, n: u64, order: u32, list: &[(u64, u32)]) -> Self {
        SumSpec {
            kind,
            n,
            order,
            h_shift: 0,
            factors: factors(list),
        }
    }

    /// `G_{n,p,q}^{r,s,m}`
    pub fn g(n: u64, p: u32, q: u32, r: u64, s: u64, m: u32) -> Self {
        Self::new(SumKind::G, n, m, &[(r, p), (s, q)])
    }

    /// `V_{n,p,q}^{r,s,m}`
    pub fn v(n: u64, p: u32, q: u32, r: u64, s: u64, m: u32) -> Self {
        Self::new(SumKind::V, n, m, &[(r, p), (s, q)])
    }

    /// `R_{n,p,q}^{r,s}`
    pub fn r2(n: u64, p: u32, q: u32, r: u64, s: u64) -> Self {
        Self::new(SumKind::R, n, 1, &[(r, p), (s, q)])
    }

    /// `R_{n,p,q,w}^{r,s,u}`
    pub fn r3(n: u64, p: u32, q: u32, w: u32, r: u64, s: u64, u: u64) -> Self {
        Self::new(SumKind::R, n, 1, &[(r, p), (s, q), (u, w)])
    }

    /// `sum_{j=1}^{n} H_{j+shift,1} H_{j+shift,2} / j`
    pub fn mixed(n: u64, shift: u64) -> Self {
        Self::new(SumKind::Mixed, n, 1, &[(0, 1)]).with_h_shift(shift)
    }

    pub fn rational(n: u64, list: &[(u64, u32)]) -> Self {
        Self::new(SumKind::R, n, 1, list)
    }

    pub fn linear(n: u64, m: u32, list: &[(u64, u32)]) -> Self {
        Self::new(SumKind::G, n, m, list)
    }

    pub fn quadratic(n: u64, m: u32, list: &[(u64, u32)]) -> Self {
        Self::new(SumKind::V, n, m, list)
    }

    pub fn with_h_shift(mut self, h_shift: u64) -> Self {
        self.h_shift = h_shift;
        self
    }

    pub fn with_n(mut self, n: u64) -> Self {
        self.n = n;
        self
    }

    /// Same sum with zero powers dropped, equal shifts merged and the
    /// factors sorted by shift.
    pub fn canonical(&self) -> SumSpec {
        let mut merged: Vec<Factor> = Vec::new();
        let mut sorted: Vec<Factor> = self.factors.iter().copied().filter(|f| f.power > 0).collect();
        sorted.sort();
        for f in sorted {
            match merged.last_mut() {
                Some(last) if last.shift == f.shift => last.power += f.power,
                _ => merged.push(f),
            }
        }
        SumSpec {
            factors: merged,
            ..self.clone()
        }
    }

    fn factor(&self, i: usize) -> Factor {
        self.factors
            .get(i)
            .copied()
            .unwrap_or(Factor { shift: 0, power: 0 })
    }

    /// First exponent.
    pub fn p(&self) -> u32 {
        self.factor(0).power
    }

    /// Second exponent.
    pub fn q(&self) -> u32 {
        self.factor(1).power
    }

    /// First shift.
    pub fn r(&self) -> u64 {
        self.factor(0).shift
    }

    /// Second shift.
    pub fn s(&self) -> u64 {
        self.factor(1).shift
    }

    /// Total degree of the denominator.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.power).sum()
    }

    /// G or V specs the recursive theorems do not cover: more than two
    /// factors, a shifted numerator, or `p + q <= 1`.
    pub fn outside_theorem_domain(&self) -> bool {
        match self.kind {
            SumKind::G | SumKind::V => {
                self.factors.len() > 2 || self.h_shift != 0 || self.p() + self.q() <= 1
            }
            _ => true,
        }
    }

    /// Highest harmonic index and order the summation reads.
    pub fn table_extent(&self) -> Option<(u64, u32)> {
        match self.kind {
            SumKind::R => None,
            SumKind::G | SumKind::V => Some((self.n + self.h_shift, self.order)),
            SumKind::Mixed => Some((self.n + self.h_shift, 2)),
        }
    }

    fn check_table<T: Scalar>(&self, table: &HarmonicTable<T>) -> Result<()> {
        if let Some((j, m)) = self.table_extent() {
            if self.n > 0 {
                table.get(j, m)?;
            }
        }
        if matches!(self.kind, SumKind::G | SumKind::V) && self.order == 0 {
            return Err(Error::InvalidParameter("harmonic order m must be >= 1".into()));
        }
        Ok(())
    }

    /// The `j`-th term of the sum.
    pub fn summand<T: Scalar>(&self, j: u64, table: &HarmonicTable<T>) -> Result<T> {
        let prec = table.precision();
        let h = |m: u32| table.get(j + self.h_shift, m).cloned();
        let numerator = match self.kind {
            SumKind::R => T::one(prec),
            SumKind::G => h(self.order)?,
            SumKind::V => {
                let x = h(self.order)?;
                x.clone() * x
            }
            SumKind::Mixed => h(1)? * h(2)?,
        };
        let mut den = BigInt::from(1);
        for f in &self.factors {
            den *= num_traits::pow(BigInt::from(j + f.shift), f.power as usize);
        }
        Ok(numerator * T::from_big_ratio(&BigInt::from(1), &den, prec))
    }
}

impl SumSpec {
    /// The summand alone, e.g. `H(j,1) / ((j+1)(j+2))`.
    pub fn summand_text(&self) -> String {
        let j = |shift: u64| match shift {
            0 => "j".to_string(),
            k => format!("j+{k}"),
        };
        let h = |order: u32| format!("H({},{order})", j(self.h_shift));
        let mut out = match self.kind {
            SumKind::R => "1".to_string(),
            SumKind::G => h(self.order),
            SumKind::V => format!("{}^2", h(self.order)),
            SumKind::Mixed => format!("{}{}", h(1), h(2)),
        };
        let den: Vec<String> = self
            .factors
            .iter()
            .filter(|x| x.power > 0)
            .map(|x| match (x.shift, x.power) {
                (0, 1) => "j".to_string(),
                (0, p) => format!("j^{p}"),
                (k, 1) => format!("(j+{k})"),
                (k, p) => format!("(j+{k})^{p}"),
            })
            .collect();
        if !den.is_empty() {
            out.push_str(" / ");
            if den.len() > 1 {
                out.push_str(&format!("({})", den.join("")));
            } else {
                out.push_str(&den[0]);
            }
        }
        out
    }
}

impl fmt::Display for SumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum_{{j=1..{}}} {}", self.n, self.summand_text())
    }
}

/// Direct summation in ascending `j`. `n = 0` gives zero.
///
/// Fails with [`Error::TableCapacity`] when the table does not reach
/// `H_{n+h_shift, m}`; it never extends the table behind the caller's back.
pub fn direct_eval<T: Scalar>(spec: &SumSpec, table: &HarmonicTable<T>) -> Result<T> {
    spec.check_table(table)?;
    let mut acc = T::zero(table.precision());
    for j in 1..=spec.n {
        acc = acc + spec.summand(j, table)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{harmonic, Rational};

    fn table() -> HarmonicTable {
        HarmonicTable::build(40, 4).unwrap()
    }

    #[test]
    fn spec_examples() {
        let t = table();
        let cases = [
            (SumSpec::g(1, 2, 0, 0, 0, 1), Rational::one()),
            (SumSpec::g(2, 1, 1, 1, 2, 1), Rational::ratio(7, 24)),
            (SumSpec::v(1, 2, 0, 0, 0, 2), Rational::one()),
            (SumSpec::r2(3, 1, 1, 0, 1), Rational::ratio(3, 4)),
            // 1/(2·3) + (3/2)^2/(3·4)
            (SumSpec::v(2, 1, 1, 1, 2, 1), Rational::ratio(17, 48)),
            (SumSpec::v(1, 2, 0, 1, 0, 1), Rational::ratio(1, 4)),
        ];
        for (spec, want) in cases {
            assert_eq!(direct_eval(&spec, &t).unwrap(), want, "{spec}");
        }
    }

    #[test]
    fn empty_sum_is_zero() {
        let t = table();
        for spec in [SumSpec::g(0, 3, 1, 2, 0, 2), SumSpec::mixed(0, 2)] {
            assert!(direct_eval(&spec, &t).unwrap().is_zero());
        }
    }

    #[test]
    fn mixed_shifted_by_hand() {
        let t = table();
        // H_{2,1} H_{2,2} / 1 = (3/2)(5/4)
        assert_eq!(
            direct_eval(&SumSpec::mixed(1, 1), &t).unwrap(),
            Rational::ratio(15, 8)
        );
    }

    #[test]
    fn capacity_is_reported() {
        let t = HarmonicTable::build(10, 2).unwrap();
        let spec = SumSpec::mixed(9, 2);
        assert!(matches!(direct_eval(&spec, &t), Err(Error::TableCapacity { .. })));
        let spec = SumSpec::g(3, 1, 0, 0, 0, 3);
        assert!(matches!(direct_eval(&spec, &t), Err(Error::TableCapacity { .. })));
        // purely rational sums do not read the table
        assert!(direct_eval(&SumSpec::r2(500, 1, 1, 0, 1), &t).is_ok());
    }

    #[test]
    fn single_power_sum_is_harmonic_difference() {
        let t = table();
        for r in 0..4u64 {
            for p in 1..4u32 {
                let got = direct_eval(&SumSpec::r2(20, p, 0, r, 0), &t).unwrap();
                let want = harmonic(20 + r, p).unwrap() - harmonic(r, p).unwrap();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn theorem_domain_flag() {
        assert!(SumSpec::g(5, 1, 0, 1, 0, 1).outside_theorem_domain());
        assert!(!SumSpec::g(5, 1, 1, 1, 2, 1).outside_theorem_domain());
        assert!(SumSpec::mixed(5, 0).outside_theorem_domain());
    }
}
