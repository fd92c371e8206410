//! Scalar abstraction for the simulation numerics.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating scalar the whole crate is generic over.
///
/// Covers `f32` and `f64`. The bounds are what the numerics actually need:
/// transcendental functions and constants from [`Float`]/[`FloatConst`],
/// conversion from literal tolerances via [`FromPrimitive`], summation, and
/// thread-safety for the parallel sweep.
pub trait Scalar:
    'static
    + Send
    + Sync
    + Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + Sum
    + Debug
    + Display
    + LowerExp
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` literal (tolerance, threshold) into the working scalar.
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal representable in scalar type")
}
