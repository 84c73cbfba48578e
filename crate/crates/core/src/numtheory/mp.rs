//! Minimal fixed-point arithmetic on big integers, 192 fractional bits.
//!
//! The Hardy–Ramanujan residual check subtracts an analytic approximation
//! from an exact partition number; the difference sits dozens of decimal
//! orders below the values themselves, far outside what binary64 can
//! resolve. This module evaluates the approximation with ~57 decimal
//! digits so the subtraction is meaningful. A value `v` is represented by
//! the integer `round(v * 2^SHIFT)`; everything here assumes nonnegative
//! operands.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

pub(crate) const SHIFT: u32 = 192;

// 60 decimal digits each; unit tests recompute both constants from
// scratch (Machin's formula, the 1/(k 2^k) series) to guard the literals.
const PI_DEC: &str = "3.141592653589793238462643383279502884197169399375105820974944";
const LN2_DEC: &str = "0.693147180559945309417232121458176568075500134360255254120680";

pub(crate) fn one_fix() -> BigInt {
    BigInt::one() << SHIFT
}

/// Parse a nonnegative decimal literal into fixed point.
fn from_decimal(s: &str) -> BigInt {
    let (int_part, frac_part) = s.split_once('.').expect("decimal literal");
    let digits: BigInt = format!("{int_part}{frac_part}").parse().expect("digits");
    (digits << SHIFT) / BigInt::from(10u32).pow(frac_part.len() as u32)
}

pub(crate) fn pi_fix() -> BigInt {
    from_decimal(PI_DEC)
}

pub(crate) fn ln2_fix() -> BigInt {
    from_decimal(LN2_DEC)
}

pub(crate) fn fixmul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> SHIFT
}

pub(crate) fn fixdiv(a: &BigInt, b: &BigInt) -> BigInt {
    (a << SHIFT) / b
}

/// Square root in fixed point: input and output both scaled by 2^SHIFT.
pub(crate) fn sqrt_fix(a: &BigInt) -> BigInt {
    (a << SHIFT).sqrt()
}

/// e^y for fixed-point y >= 0: split off multiples of ln 2, Taylor on the
/// remainder, shift back in.
pub(crate) fn exp_fix(y: &BigInt) -> BigInt {
    let ln2 = ln2_fix();
    let m = (y / &ln2).to_u64().expect("exponent within range");
    let r = y - &ln2 * m;
    let mut sum = one_fix();
    let mut term = one_fix();
    let mut k = 1u64;
    loop {
        term = fixmul(&term, &r) / k;
        if term.is_zero() {
            break;
        }
        sum += &term;
        k += 1;
    }
    sum << m
}

pub(crate) fn to_f64(a: &BigInt) -> f64 {
    a.to_f64().expect("finite") / 2f64.powi(SHIFT as i32)
}
