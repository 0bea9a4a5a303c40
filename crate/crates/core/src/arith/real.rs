use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Rational, Scalar};

/// Binary fixed-point number: `mantissa / 2^bits`.
///
/// Used wherever exact rationals are too expensive (limits, convergence
/// checks at n = 10^4 and beyond, benchmarks). Every operation truncates to
/// `bits` fractional bits, so the absolute error of a chain of k operations
/// is at most about k * 2^-bits for values of moderate magnitude.
#[derive(Clone, PartialEq, Eq)]
pub struct Real {
    mantissa: BigInt,
    bits: u32,
}

impl Real {
    pub fn from_mantissa(mantissa: BigInt, bits: u32) -> Self {
        Real { mantissa, bits }
    }

    pub fn from_rational(value: &Rational, bits: u32) -> Self {
        Self::from_big_ratio(value.numer(), value.denom(), bits)
    }

    pub fn from_int(value: i64, bits: u32) -> Self {
        Real {
            mantissa: BigInt::from(value) << bits,
            bits,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn abs(&self) -> Self {
        Real {
            mantissa: self.mantissa.abs(),
            bits: self.bits,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Re-express at another precision (truncating when narrowing).
    pub fn with_bits(&self, bits: u32) -> Self {
        let mantissa = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa << (bits - self.bits),
            Ordering::Less => &self.mantissa >> (self.bits - bits),
        };
        Real { mantissa, bits }
    }

    /// `2^-bits`, the unit in the last place.
    pub fn ulp(bits: u32) -> Self {
        Real {
            mantissa: BigInt::from(1),
            bits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let excess = self.mantissa.bits().saturating_sub(60) as u32;
        let shift = excess.min(self.bits);
        let top = (&self.mantissa >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// Decimal expansion rounded half away from zero to `digits` places.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let ratio = Rational::new(self.mantissa.clone(), BigInt::from(1) << self.bits)
            .expect("power of two is nonzero");
        ratio.to_decimal_string(digits)
    }

    /// Natural logarithm of a positive integer, to `bits` precision.
    ///
    /// `ln x = 2 atanh((x-1)/(x+1))`, applied after splitting off powers of
    /// two so the series argument stays below 1/3.
    pub fn ln_int(x: u64, bits: u32) -> Self {
        assert!(x > 0, "ln of zero");
        let guard = bits + 32;
        let k = 63 - x.leading_zeros();
        let ln2 = atanh_recip_series(&BigInt::from(1), &BigInt::from(3), guard) * 2;
        // x = 2^k * y with y in [1, 2)
        let num = BigInt::from(x) - (BigInt::from(1) << k);
        let den = BigInt::from(x) + (BigInt::from(1) << k);
        let rest = atanh_recip_series(&num, &den, guard) * 2;
        (ln2 * k as i64 + rest).with_bits(bits)
    }

    fn align(self, other: Self) -> (BigInt, BigInt, u32) {
        if self.bits == other.bits {
            (self.mantissa, other.mantissa, self.bits)
        } else {
            let bits = self.bits.max(other.bits);
            (
                self.with_bits(bits).mantissa,
                other.with_bits(bits).mantissa,
                bits,
            )
        }
    }
}

/// atanh(num/den) for |num/den| < 1 via the odd power series.
fn atanh_recip_series(num: &BigInt, den: &BigInt, bits: u32) -> Real {
    let one = BigInt::from(1) << bits;
    let mut power = (&one * num) / den;
    let den_sq = den * den;
    let num_sq = num * num;
    let mut acc = BigInt::zero();
    let mut k: u64 = 1;
    while !power.is_zero() {
        acc += &power / BigInt::from(k);
        power = (power * &num_sq) / &den_sq;
        k += 2;
    }
    Real::from_mantissa(acc, bits)
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.bits as f64) * 0.30103) as usize);
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({:.30}, {} bits)", self, self.bits)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b, _) = self.clone().align(other.clone());
        Some(a.cmp(&b))
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, rhs: Real) -> Real {
        let (a, b, bits) = self.align(rhs);
        Real::from_mantissa(a + b, bits)
    }
}

impl Sub for Real {
    type Output = Real;
    fn sub(self, rhs: Real) -> Real {
        let (a, b, bits) = self.align(rhs);
        Real::from_mantissa(a - b, bits)
    }
}

impl Mul for Real {
    type Output = Real;
    fn mul(self, rhs: Real) -> Real {
        let (a, b, bits) = self.align(rhs);
        Real::from_mantissa((a * b) >> bits, bits)
    }
}

impl Div for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        let (a, b, bits) = self.align(rhs);
        assert!(!b.is_zero(), "fixed-point division by zero");
        Real::from_mantissa((a << bits).div_floor(&b), bits)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::from_mantissa(-self.mantissa, self.bits)
    }
}

impl Add<i64> for Real {
    type Output = Real;
    fn add(self, rhs: i64) -> Real {
        let bits = self.bits;
        Real::from_mantissa(self.mantissa + (BigInt::from(rhs) << bits), bits)
    }
}

impl Sub<i64> for Real {
    type Output = Real;
    fn sub(self, rhs: i64) -> Real {
        let bits = self.bits;
        Real::from_mantissa(self.mantissa - (BigInt::from(rhs) << bits), bits)
    }
}

impl Mul<i64> for Real {
    type Output = Real;
    fn mul(self, rhs: i64) -> Real {
        Real::from_mantissa(self.mantissa * rhs, self.bits)
    }
}

impl Div<i64> for Real {
    type Output = Real;
    fn div(self, rhs: i64) -> Real {
        assert!(rhs != 0, "fixed-point division by zero");
        Real::from_mantissa(self.mantissa.div_floor(&BigInt::from(rhs)), self.bits)
    }
}

impl Scalar for Real {
    type Precision = u32;

    fn from_big_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        // round to nearest
        let scaled = (num << (bits + 1)).div_floor(den);
        Real::from_mantissa((scaled + 1) >> 1, bits)
    }

    fn precision(&self) -> u32 {
        self.bits
    }

    fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }
}
