//! Nonnegative reals represented by their natural logarithm.
//!
//! The exact counts and the exponential main terms both overflow binary64
//! well inside the scales this crate verifies, so every comparison of the
//! two happens on logarithms. Multiplication and division are exact to
//! binary rounding; addition is intentionally absent.

use num_bigint::BigInt;
use num_bigint::Sign;
use num_traits::Zero;
use std::ops::{Div, Mul};

use crate::scalar::Real;

/// A nonnegative real stored as its natural log, with an exact-zero flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScaled<R: Real> {
    ln: R,
    is_zero: bool,
}

impl<R: Real> LogScaled<R> {
    pub fn zero() -> Self {
        Self {
            ln: R::neg_infinity(),
            is_zero: true,
        }
    }

    /// Value `e^ln`.
    pub fn from_ln(ln: R) -> Self {
        assert!(ln.is_finite(), "log-scaled value must have a finite log");
        Self { ln, is_zero: false }
    }

    /// Wrap an ordinary nonnegative real.
    pub fn from_value(v: R) -> Self {
        assert!(v >= R::zero(), "log-scaled values are nonnegative");
        if v.is_zero() {
            Self::zero()
        } else {
            Self::from_ln(v.ln())
        }
    }

    /// Exact big integer to log scale, via the bit length and the leading
    /// bits; accurate to a relative half-ulp of the mantissa conversion.
    pub fn from_bigint(v: &BigInt) -> Self {
        assert!(v.sign() != Sign::Minus, "log-scaled values are nonnegative");
        if v.is_zero() {
            return Self::zero();
        }
        let bits = v.bits();
        let ln64 = if bits <= 900 {
            v.to_f64_lossy().ln()
        } else {
            let shift = bits - 512;
            let top: BigInt = v >> shift;
            top.to_f64_lossy().ln() + shift as f64 * std::f64::consts::LN_2
        };
        Self::from_ln(R::from_f64(ln64).expect("log fits the scalar"))
    }

    pub fn is_zero(&self) -> bool {
        self.is_zero
    }

    /// Natural log; negative infinity for the exact zero.
    pub fn ln(&self) -> R {
        self.ln
    }

    /// Back to an ordinary real; overflows to infinity when out of range.
    pub fn value(&self) -> R {
        if self.is_zero {
            R::zero()
        } else {
            self.ln.exp()
        }
    }

    /// `self / other` as an ordinary real.
    pub fn ratio(&self, other: &Self) -> R {
        if self.is_zero {
            return R::zero();
        }
        assert!(!other.is_zero, "ratio against exact zero");
        (self.ln - other.ln).exp()
    }

    /// `|self/other - 1|`, the relative deviation between two values.
    pub fn rel_err(&self, other: &Self) -> R {
        (self.ratio(other) - R::one()).abs()
    }
}

trait ToF64Lossy {
    fn to_f64_lossy(&self) -> f64;
}

impl ToF64Lossy for BigInt {
    fn to_f64_lossy(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl<R: Real> Mul for LogScaled<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero || rhs.is_zero {
            Self::zero()
        } else {
            Self::from_ln(self.ln + rhs.ln)
        }
    }
}

impl<R: Real> Div for LogScaled<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero, "division by exact zero");
        if self.is_zero {
            Self::zero()
        } else {
            Self::from_ln(self.ln - rhs.ln)
        }
    }
}
