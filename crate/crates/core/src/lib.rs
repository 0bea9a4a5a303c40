//! Exact evaluation of finite sums of generalized harmonic numbers.
//!
//! The crate holds four cooperating layers:
//!
//! * [`arith`]: exact rationals, fixed-point reals, `H_{n,m}` tables;
//! * [`oracle`]: literal direct summation, the ground truth;
//! * [`catalog`]: closed forms keyed by stable identifiers, with limits;
//! * [`recursion`]: partial-fraction reduction of the general `G` and `V`
//!   families and the shift recursions in the denominator offset `m`.
//!
//! [`limits`] evaluates the limit expressions to arbitrary precision and
//! runs the convergence checks.

pub mod arith;
pub mod catalog;
pub mod error;
pub mod limits;
pub mod oracle;
pub mod recursion;

pub use arith::{harmonic, shared_table, tail_sum, HarmonicTable, Rational, Real, Scalar};
pub use catalog::{closed_form, limit_of, list_formulas, Family, FormulaEntry, Params};
pub use error::{Error, Result};
pub use limits::{eval_limit, BasisConstant, GrowthClass, Limit, LimitExpr};
pub use oracle::{direct_eval, Factor, SumKind, SumSpec};
pub use recursion::{eval_g, eval_shift_recursion, eval_v, BasePolicy, Evaluator, ShiftFamily, TraceNode};
