use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;

/// Field operations shared by the exact and the fixed-point number types.
///
/// Every closed form, the oracle and the harmonic tables are written once
/// against this trait and instantiated for [`Rational`](super::Rational)
/// (verification) and [`Real`](super::Real) (limits, benchmarks at large n).
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<i64, Output = Self>
    + Sub<i64, Output = Self>
    + Mul<i64, Output = Self>
    + Div<i64, Output = Self>
{
    /// Whatever the type needs to materialise a constant: `()` for exact
    /// rationals, the number of fractional bits for fixed point.
    type Precision: Copy + Debug + Send + Sync + 'static;

    fn from_big_ratio(num: &BigInt, den: &BigInt, prec: Self::Precision) -> Self;

    fn from_ratio(num: i64, den: i64, prec: Self::Precision) -> Self {
        Self::from_big_ratio(&BigInt::from(num), &BigInt::from(den), prec)
    }

    fn zero(prec: Self::Precision) -> Self {
        Self::from_ratio(0, 1, prec)
    }

    fn one(prec: Self::Precision) -> Self {
        Self::from_ratio(1, 1, prec)
    }

    fn precision(&self) -> Self::Precision;

    fn is_zero(&self) -> bool;

    fn powi(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.precision());
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }

    /// `1 / base^exp`.
    fn recip_pow(base: u64, exp: u32, prec: Self::Precision) -> Self {
        let den = num_traits::pow(BigInt::from(base), exp as usize);
        Self::from_big_ratio(&BigInt::from(1), &den, prec)
    }
}
