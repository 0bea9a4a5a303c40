//! Exact and fixed-point arithmetic, generalized harmonic numbers and the
//! short reciprocal tails used by the shift recursions.

mod harmonic;
mod rational;
mod real;
mod scalar;

pub use harmonic::{harmonic, shared_table, tail_sum, HarmonicTable, DEFAULT_M_MAX};
pub(crate) use harmonic::{harmonic_in, tail_sum_in};
pub use rational::Rational;
pub use real::Real;
pub use scalar::Scalar;
