use std::cell::RefCell;

use serde::{Deserialize, Serialize};

use crate::arith::{harmonic_in, tail_sum_in, HarmonicTable, Scalar};
use crate::error::Error;
use crate::oracle::{direct_eval, SumSpec};

/// Extra integer parameters of the parametric entries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
}

impl Params {
    pub const NONE: Params = Params { m: None, r: None };

    pub fn m(m: u64) -> Self {
        Params { m: Some(m), r: None }
    }

    pub fn mr(m: u64, r: u64) -> Self {
        Params {
            m: Some(m),
            r: Some(r),
        }
    }
}

/// Everything a closed form may read: `n`, the parameters, and the
/// harmonic table.
///
/// Accessors never fail; the first problem (table too small, a pole at
/// the requested `n`) is recorded and surfaced by the caller once the
/// formula returns, so formulas read like the printed identities.
pub struct Ctx<'a, T: Scalar> {
    n: u64,
    params: Params,
    table: &'a HarmonicTable<T>,
    failure: RefCell<Option<Error>>,
}

impl<'a, T: Scalar> Ctx<'a, T> {
    pub fn new(n: u64, params: Params, table: &'a HarmonicTable<T>) -> Self {
        Ctx {
            n,
            params,
            table,
            failure: RefCell::new(None),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn table(&self) -> &'a HarmonicTable<T> {
        self.table
    }

    /// The `m` parameter (1 when absent).
    pub fn m(&self) -> u64 {
        self.params.m.unwrap_or(1)
    }

    /// The `r` parameter (0 when absent).
    pub fn r(&self) -> u64 {
        self.params.r.unwrap_or(0)
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn fail(&self, error: Error) {
        let mut slot = self.failure.borrow_mut();
        if slot.is_none() {
            *slot = Some(error);
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.borrow().is_some()
    }

    pub fn finish(self, value: T) -> Result<T, Error> {
        match self.failure.into_inner() {
            Some(e) => Err(e),
            None => Ok(value),
        }
    }

    fn zero(&self) -> T {
        T::zero(self.table.precision())
    }

    /// `a / b`
    pub fn q(&self, a: i64, b: i64) -> T {
        T::from_ratio(a, b, self.table.precision())
    }

    pub fn int(&self, a: i64) -> T {
        self.q(a, 1)
    }

    fn index(&self, k: i64) -> Option<u64> {
        let idx = self.n as i64 + k;
        if idx < 0 {
            self.fail(Error::InvalidParameter(format!("negative index n{k:+}")));
            None
        } else {
            Some(idx as u64)
        }
    }

    /// `H_{n+k, m}`
    pub fn h(&self, k: i64, m: u32) -> T {
        let Some(j) = self.index(k) else {
            return self.zero();
        };
        match self.table.get(j, m) {
            Ok(v) => v.clone(),
            Err(e) => {
                self.fail(e);
                self.zero()
            }
        }
    }

    /// `H_{a, m}` for a fixed (small) index.
    pub fn hc(&self, a: u64, m: u32) -> T {
        match self.table.get(a, m) {
            Ok(v) => v.clone(),
            Err(_) => harmonic_in::<T>(a, m, self.table.precision()),
        }
    }

    /// `n + k`
    pub fn nk(&self, k: i64) -> T {
        self.int(self.n as i64 + k)
    }

    /// `1 / (n + k)^p`
    pub fn inv(&self, k: i64, p: u32) -> T {
        let Some(j) = self.index(k) else {
            return self.zero();
        };
        if j == 0 {
            self.fail(Error::InvalidParameter(format!("pole at n = {}", self.n)));
            return self.zero();
        }
        T::recip_pow(j, p, self.table.precision())
    }

    /// `sum_{j=n+a}^{n+b} 1/j^m` (zero when `b < a`).
    pub fn tail(&self, a: i64, b: i64, m: u32) -> T {
        tail_sum_in::<T>(self.n, a, b, m, self.table.precision())
    }

    /// An inner sum the identity leaves open, evaluated by direct summation.
    pub fn open(&self, spec: &SumSpec) -> T {
        match direct_eval(spec, self.table) {
            Ok(v) => v,
            Err(e) => {
                self.fail(e);
                self.zero()
            }
        }
    }

    /// `sum_{j=1}^{n+dn} H_{j,m} / j^p`
    pub fn sum_h(&self, dn: i64, m: u32, p: u32) -> T {
        match self.index(dn) {
            Some(upper) => self.open(&SumSpec::linear(upper, m, &[(0, p)])),
            None => self.zero(),
        }
    }

    /// `sum_{j=1}^{n+dn} H_{j,m}^2 / j^p`
    pub fn sum_hsq(&self, dn: i64, m: u32, p: u32) -> T {
        match self.index(dn) {
            Some(upper) => self.open(&SumSpec::quadratic(upper, m, &[(0, p)])),
            None => self.zero(),
        }
    }
}
