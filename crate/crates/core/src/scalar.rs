//! Scalar traits the generic types are built over.
//!
//! [`Coeff`] is the exact integer ring used by series coefficients; it is
//! deliberately ring-only (no division), so every series operation stays
//! bit-exact. [`Real`] is the floating scalar for the asymptotic side.

use std::fmt;
use std::ops::{AddAssign, Mul, Neg, SubAssign};

use num_traits::{FloatConst, FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Exact coefficient ring for truncated series.
///
/// Implemented by any signed integer-like type; the crate instantiates it
/// with `BigInt` (see the crate-root aliases) and tests also exercise the
/// primitive integers.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + From<i64>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Eq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Signed
        + Neg<Output = Self>
        + for<'a> AddAssign<&'a Self>
        + for<'a> SubAssign<&'a Self>
        + for<'a> Mul<&'a Self, Output = Self>
        + From<i64>
{
}

/// Floating scalar for the asymptotic evaluators: `f32` or `f64`.
pub trait Real:
    num_traits::Float + FloatConst + FromPrimitive + ToPrimitive + fmt::Debug + fmt::Display
{
}

impl Real for f32 {}
impl Real for f64 {}
