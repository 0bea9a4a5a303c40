//! High-precision π and ζ(s).
//!
//! π comes from Machin's formula; ζ(s) for integer s >= 2 from an
//! accelerated alternating series (Borwein, algorithm 2), evaluated in exact
//! rational arithmetic and rounded once. Both carry 32 guard bits, so the
//! returned values are within 2^-bits of the true constants.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::arith::{Rational, Real, Scalar};

const GUARD_BITS: u32 = 32;

/// π, ζ(3) and ζ(5) at a fixed precision.
#[derive(Debug, Clone)]
pub struct Constants {
    pub bits: u32,
    pub pi: Real,
    pub zeta3: Real,
    pub zeta5: Real,
}

static CACHE: Lazy<Mutex<HashMap<u32, Arc<Constants>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Memoized per precision; safe to call from many threads.
pub fn constants(bits: u32) -> Arc<Constants> {
    let mut cache = CACHE.lock().unwrap_or_else(|p| p.into_inner());
    Arc::clone(cache.entry(bits).or_insert_with(|| {
        Arc::new(Constants {
            bits,
            pi: pi(bits),
            zeta3: zeta(3, bits),
            zeta5: zeta(5, bits),
        })
    }))
}

fn arctan_recip(x: u64, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    let x2 = BigInt::from(x * x);
    let mut power = one / BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        power /= &x2;
        k += 1;
    }
    acc
}

pub fn pi(bits: u32) -> Real {
    let work = bits + GUARD_BITS;
    let m = arctan_recip(5, work) * 16 - arctan_recip(239, work) * 4;
    Real::from_mantissa(m, work).with_bits(bits)
}

/// ζ(s) for integer `s >= 2`.
pub fn zeta(s: u32, bits: u32) -> Real {
    assert!(s >= 2, "zeta needs s >= 2");
    // error ~ 3 / (3 + sqrt 8)^n, log2(3 + sqrt 8) > 2.54
    let n = ((bits + GUARD_BITS + 4) as f64 / 2.54).ceil() as u64;
    let d = borwein_weights(n);
    let dn = &d[n as usize];
    let mut acc = Rational::zero();
    for k in 0..n {
        let num = &d[k as usize] - dn;
        let term = Rational::new(num, num_traits::pow(BigInt::from(k + 1), s as usize))
            .expect("nonzero denominator");
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    // 1 - 2^{1-s}
    let eta_factor = Rational::one() - Rational::new(1, BigInt::one() << (s - 1)).expect("nonzero");
    let value = -acc / (eta_factor * Rational::from_integer(dn.clone()));
    Real::from_big_ratio(value.numer(), value.denom(), bits)
}

/// `d_k = n sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)` for k = 0..=n.
fn borwein_weights(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::zero();
    // term_i = n (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut term = Rational::one(); // i = 0: n (n-1)! / n! = 1
    for i in 0..=n {
        if i > 0 {
            // ratio term_i / term_{i-1} = (n+i-1)(n-i+1) 4 / ((2i)(2i-1))
            let num = BigInt::from((n + i - 1) * (n - i + 1) * 4);
            let den = BigInt::from((2 * i) * (2 * i - 1));
            term = term * Rational::new(num, den).expect("nonzero");
        }
        acc += &term;
        debug_assert!(acc.is_integer());
        out.push(acc.numer().clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: &str = "3.14159265358979323846264338327950288419716939937510582097494";
    const ZETA3: &str = "1.20205690315959428539973816151144999076498629234049888179227";
    const ZETA5: &str = "1.03692775514336992633136548645703416805708091950191281197419";

    fn agrees(x: &Real, reference: &str, digits: usize) {
        let got = x.to_decimal_string(digits + 2);
        assert_eq!(&got[..digits + 2], &reference[..digits + 2], "{got}");
    }

    #[test]
    fn reference_digits() {
        let c = constants(200);
        agrees(&c.pi, PI, 55);
        agrees(&c.zeta3, ZETA3, 55);
        agrees(&c.zeta5, ZETA5, 55);
    }

    #[test]
    fn even_zeta_matches_pi_powers() {
        let bits = 256;
        let p = pi(bits);
        let p2 = p.clone() * p.clone();
        let tol = Real::ulp(bits) * 256;
        assert!((zeta(2, bits) - p2.clone() / 6).abs() <= tol);
        assert!((zeta(4, bits) - p2.clone() * p2.clone() / 90).abs() <= tol);
        assert!((zeta(6, bits) - p2.clone() * p2.clone() * p2 / 945).abs() <= tol);
    }

    #[test]
    fn zeta3_agrees_with_central_binomial_series() {
        // ζ(3) = (5/2) sum_{k>=1} (-1)^{k+1} / (k^3 C(2k,k))
        let bits = 256;
        let mut acc = Rational::zero();
        let mut central = BigInt::one();
        for k in 1..=200u64 {
            central = central * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k);
            let term = Rational::new(1, central.clone() * BigInt::from(k * k * k)).unwrap();
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let apery = Real::from_rational(&(acc * Rational::ratio(5, 2)), bits);
        assert!((apery - zeta(3, bits)).abs() <= Real::ulp(bits) * 16);
    }

    #[test]
    fn doubling_precision_is_consistent() {
        let coarse = constants(128);
        let fine = constants(256);
        let tol = Real::ulp(128) * 2;
        assert!((fine.pi.with_bits(128) - coarse.pi.clone()).abs() <= tol);
        assert!((fine.zeta3.with_bits(128) - coarse.zeta3.clone()).abs() <= tol);
        assert!((fine.zeta5.with_bits(128) - coarse.zeta5.clone()).abs() <= tol);
    }
}
