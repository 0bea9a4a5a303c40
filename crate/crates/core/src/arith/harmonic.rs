use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use super::{Rational, Real, Scalar};
use crate::error::{Error, Result};

/// Largest order appearing in the catalog (H_{n,6}).
pub const DEFAULT_M_MAX: u32 = 6;

/// `H_{n,m} = sum_{i=1}^{n} i^{-m}`, exactly.
pub fn harmonic(n: u64, m: u32) -> Result<Rational> {
    check_order(m)?;
    Ok(harmonic_in::<Rational>(n, m, ()))
}

pub(crate) fn harmonic_in<T: Scalar>(n: u64, m: u32, prec: T::Precision) -> T {
    (1..=n).fold(T::zero(prec), |acc, i| acc + T::recip_pow(i, m, prec))
}

/// `sum_{j=n+a}^{n+b} 1/j^m`; zero when `b < a`.
pub fn tail_sum(n: u64, a: u64, b: u64, m: u32) -> Result<Rational> {
    check_order(m)?;
    if a == 0 {
        return Err(Error::InvalidParameter("tail_sum needs a >= 1".into()));
    }
    Ok(tail_sum_in::<Rational>(n, a as i64, b as i64, m, ()))
}

pub(crate) fn tail_sum_in<T: Scalar>(n: u64, a: i64, b: i64, m: u32, prec: T::Precision) -> T {
    let lo = n as i64 + a;
    let hi = n as i64 + b;
    (lo.max(1)..=hi).fold(T::zero(prec), |acc, j| acc + T::recip_pow(j as u64, m, prec))
}

fn check_order(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("harmonic order m must be >= 1".into()));
    }
    Ok(())
}

/// Dense table of `H_{j,m}` for `0 <= j <= n_max`, `1 <= m <= m_max`.
///
/// Read-only after construction; share it behind an `Arc` across workers.
#[derive(Debug, Clone)]
pub struct HarmonicTable<T: Scalar = Rational> {
    n_max: u64,
    m_max: u32,
    prec: T::Precision,
    // values[m - 1][j]
    values: Vec<Vec<T>>,
}

impl HarmonicTable<Rational> {
    pub fn build(n_max: u64, m_max: u32) -> Result<Self> {
        Self::build_in(n_max, m_max, ())
    }
}

impl HarmonicTable<Real> {
    pub fn build_real(n_max: u64, m_max: u32, bits: u32) -> Result<Self> {
        Self::build_in(n_max, m_max, bits)
    }
}

impl<T: Scalar> HarmonicTable<T> {
    pub fn build_in(n_max: u64, m_max: u32, prec: T::Precision) -> Result<Self> {
        check_order(m_max)?;
        let values = (1..=m_max)
            .map(|m| {
                let mut column = Vec::with_capacity(n_max as usize + 1);
                let mut acc = T::zero(prec);
                column.push(acc.clone());
                for j in 1..=n_max {
                    acc = acc + T::recip_pow(j, m, prec);
                    column.push(acc.clone());
                }
                column
            })
            .collect();
        Ok(HarmonicTable {
            n_max,
            m_max,
            prec,
            values,
        })
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn m_max(&self) -> u32 {
        self.m_max
    }

    pub fn precision(&self) -> T::Precision {
        self.prec
    }

    pub fn covers(&self, j: u64, m: u32) -> bool {
        m >= 1 && m <= self.m_max && j <= self.n_max
    }

    pub fn get(&self, j: u64, m: u32) -> Result<&T> {
        if !self.covers(j, m) {
            return Err(Error::TableCapacity {
                j,
                m,
                n_max: self.n_max,
                m_max: self.m_max,
            });
        }
        Ok(&self.values[m as usize - 1][j as usize])
    }
}

static TABLES: Lazy<Mutex<HashMap<(u64, u32), Arc<HarmonicTable>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Exact table from a process-wide cache keyed by `(n_max, m_max)`.
///
/// A cached table that already covers the request is reused.
pub fn shared_table(n_max: u64, m_max: u32) -> Result<Arc<HarmonicTable>> {
    check_order(m_max)?;
    let mut tables = TABLES.lock().unwrap_or_else(|p| p.into_inner());
    if let Some(t) = tables
        .values()
        .filter(|t| t.n_max >= n_max && t.m_max >= m_max)
        .min_by_key(|t| (t.n_max, t.m_max))
    {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(HarmonicTable::build(n_max, m_max)?);
    tables.insert((n_max, m_max), Arc::clone(&table));
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(harmonic(0, 3).unwrap(), Rational::zero());
        assert_eq!(harmonic(4, 1).unwrap(), Rational::ratio(25, 12));
        assert_eq!(harmonic(3, 1).unwrap(), Rational::ratio(11, 6));
        assert_eq!(harmonic(2, 2).unwrap(), Rational::ratio(5, 4));
    }

    #[test]
    fn order_zero_rejected() {
        assert!(matches!(harmonic(3, 0), Err(Error::InvalidParameter(_))));
        assert!(HarmonicTable::build(3, 0).is_err());
    }

    #[test]
    fn tail_sums() {
        assert_eq!(tail_sum(5, 2, 1, 1).unwrap(), Rational::zero());
        assert_eq!(tail_sum(1, 2, 3, 1).unwrap(), Rational::ratio(7, 12));
        assert_eq!(tail_sum(0, 1, 4, 1).unwrap(), Rational::ratio(25, 12));
    }

    #[test]
    fn table_telescopes() {
        let t = HarmonicTable::build(30, 4).unwrap();
        for m in 1..=4 {
            assert!(t.get(0, m).unwrap().is_zero());
            for j in 1..=30u64 {
                let step = t.get(j, m).unwrap().clone() - t.get(j - 1, m).unwrap();
                assert_eq!(step, Rational::recip_pow(j, m, ()));
            }
        }
    }

    #[test]
    fn capacity_error_is_explicit() {
        let t = HarmonicTable::build(5, 2).unwrap();
        assert_eq!(
            t.get(6, 1).unwrap_err(),
            Error::TableCapacity { j: 6, m: 1, n_max: 5, m_max: 2 }
        );
        assert!(t.get(5, 3).is_err());
    }

    #[test]
    fn cache_reuses_covering_table() {
        let a = shared_table(40, 3).unwrap();
        let b = shared_table(20, 2).unwrap();
        assert!(b.n_max() >= 20 && b.m_max() >= 2);
        assert!(Arc::ptr_eq(&a, &shared_table(40, 3).unwrap()));
    }

    #[test]
    fn real_table_tracks_exact() {
        let bits = 160;
        let exact = HarmonicTable::build(50, 3).unwrap();
        let approx = HarmonicTable::build_real(50, 3, bits).unwrap();
        for m in 1..=3 {
            let e = Real::from_rational(exact.get(50, m).unwrap(), bits);
            let diff = (approx.get(50, m).unwrap().clone() - e).abs();
            assert!(diff <= Real::ulp(bits) * 64);
        }
    }
}
