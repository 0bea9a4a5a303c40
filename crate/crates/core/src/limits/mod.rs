//! Limit expressions over a fixed basis of constants, their numeric
//! evaluation, and convergence checks of the catalog partial sums.

mod constants;
mod convergence;
mod expr;

pub use constants::{constants, pi, zeta, Constants};
pub use convergence::{
    check_convergence, known_limit_table, zeta6_identity, ConvergenceReport, GapBound,
    KnownLimitRow, Verdict,
};
pub use expr::{BasisConstant, GrowthClass, Limit, LimitExpr};

use crate::arith::Real;

/// Numeric value of a limit expression with `bits` fractional bits.
pub fn eval_limit(expr: &LimitExpr, bits: u32) -> Real {
    expr.eval(bits)
}
