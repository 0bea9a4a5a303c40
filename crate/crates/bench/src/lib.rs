//! Fixtures shared by the criterion benches.

use harmonica::catalog::registry;
use harmonica::{Error, FormulaEntry, HarmonicTable, Params, Real, Result};

/// Fixed entries timed by default: one linear, one rational-weight linear and
/// one quadratic sum.
pub const SUBJECTS: [&str; 3] = ["lemSumHiii1", "lemSumHi2i1i2", "lemSumHisqi1i2"];

pub fn subjects() -> Vec<&'static FormulaEntry> {
    SUBJECTS.iter().map(|id| registry().get(id).expect("known id")).collect()
}

/// Fixed-point table deep enough for every entry in `entries` at `n`.
pub fn real_table(entries: &[&FormulaEntry], n: u64, bits: u32) -> Result<HarmonicTable<Real>> {
    let mut m_max = 2;
    loop {
        let table = HarmonicTable::<Real>::build_real(n + 8, m_max, bits)?;
        let needs = entries.iter().find_map(|e| match e.evaluate::<Real>(n.min(4), Params::NONE, &table) {
            Err(Error::TableCapacity { m, .. }) if m > m_max => Some(m),
            _ => None,
        });
        match needs {
            Some(m) => m_max = m,
            None => return Ok(table),
        }
    }
}
