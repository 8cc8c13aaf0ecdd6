//! Scalar abstraction for the exact linear-algebra layer.
//!
//! Every quantity that leaves the integer root lattice (projections,
//! ρ-vectors, eigenvectors, pairings, cone thresholds) is computed over a
//! field scalar `T: Scalar`. The crate-level alias [`crate::Rat`]
//! instantiates everything with arbitrary-precision rationals, which keeps
//! all sign and equality decisions exact; `f64`/`f32` satisfy the same
//! bounds for callers that can tolerate rounding.

use num_traits::{FromPrimitive, Num, Signed};
use std::fmt::{Debug, Display};
use std::str::FromStr;

/// Field scalar for coordinates and pairings.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + Num + Signed + FromPrimitive + Debug + Display + FromStr
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + PartialOrd + Num + Signed + FromPrimitive + Debug + Display + FromStr
{
}

/// Embeds a machine integer into the scalar field.
pub fn from_int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("integer embeds into scalar")
}

/// The scalar 1/2.
pub fn half<T: Scalar>() -> T {
    T::one() / from_int(2)
}
