pub mod bench;
pub mod eval;
pub mod index;
pub mod limits;
pub mod verify;

/// Decimal places shown for `bits` of precision.
pub(crate) fn digits_for(bits: u32) -> usize {
    (f64::from(bits) * std::f64::consts::LOG10_2).floor() as usize
}
