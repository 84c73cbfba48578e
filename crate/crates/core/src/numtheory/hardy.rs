//! Hardy–Ramanujan approximations of the partition function.
//!
//! `p̂(x) = e^{B√x}/(4√3 x) · (1 − 1/(B√x))` with `B = 2π/√6`
//! approximates `p(n)` at `x = n − 1/24` with an error of order
//! `n^{-1} e^{B√n/2}`; the ratio `p(X+r)/p(X)` is approximated by
//! `e^{Br/(2√X)}`.

use num_bigint::BigInt;

use super::mp;
use crate::asym::LogScaled;
use crate::scalar::Real;
use crate::{Error, Result};

/// The growth constant `B = 2π/√6`.
pub fn hardy_b<R: Real>() -> R {
    R::TAU() / R::from_u32(6).unwrap().sqrt()
}

/// `p̂(x)` as an ordinary float. Defined for `x > 1/B²`, where the
/// correction factor is positive; overflows for `B√x` past the binary
/// exponent range, see [`hardy_ramanujan_phat_log`].
pub fn hardy_ramanujan_phat<R: Real>(x: R) -> Result<R> {
    Ok(hardy_ramanujan_phat_log(x)?.value())
}

/// `p̂(x)` in log scale, usable far beyond binary64 range.
pub fn hardy_ramanujan_phat_log<R: Real>(x: R) -> Result<LogScaled<R>> {
    let b = hardy_b::<R>();
    let one = R::one();
    if x <= (b * b).recip() {
        return Err(Error::Domain(format!(
            "hardy_ramanujan_phat needs x > 1/B^2 = {:0.6}, got {}",
            (b * b).recip(),
            x
        )));
    }
    let bsx = b * x.sqrt();
    let four_sqrt3 = R::from_u32(48).unwrap().sqrt();
    let ln = bsx - (four_sqrt3 * x).ln() + (one - bsx.recip()).ln();
    Ok(LogScaled::from_ln(ln))
}

/// Main factor `e^{Br/(2√X)}` of the `p(X+r)/p(X)` approximation.
pub fn partition_ratio_approx<R: Real>(x: R, r: R) -> R {
    assert!(x > R::zero(), "ratio approximation needs X > 0");
    let b = hardy_b::<R>();
    (b * r / ((R::one() + R::one()) * x.sqrt())).exp()
}

/// The scaled Hardy–Ramanujan residual `|p(n) − p̂(n − 1/24)| · n · e^{−B√n/2}`.
///
/// `p_exact` must be the exact `p(n)`. The subtraction runs in ~57-digit
/// fixed-point arithmetic: the residual lives dozens of decimal orders
/// below `p(n)` itself, so binary64 evaluation of `p̂` would drown it in
/// rounding noise from roughly `n ≥ 1000`.
pub fn lemma1_residual_scaled(p_exact: &BigInt, n: u64) -> f64 {
    assert!(n >= 1, "residual defined for n >= 1");
    let pi = mp::pi_fix();
    let one = mp::one_fix();
    // x = n - 1/24 = (24n-1)/24, so B√x = π√(24n−1)/6 and
    // 4√3·x = √3(24n−1)/6 exactly.
    let t_fix = BigInt::from(24 * n - 1) << mp::SHIFT;
    let y = mp::fixmul(&pi, &mp::sqrt_fix(&t_fix)) / 6;
    let exp_y = mp::exp_fix(&y);
    let sqrt3 = mp::sqrt_fix(&(BigInt::from(3) << mp::SHIFT));
    let denom = mp::fixmul(&sqrt3, &t_fix) / 6;
    let correction = &one - mp::fixdiv(&one, &y);
    let phat = mp::fixmul(&mp::fixdiv(&exp_y, &denom), &correction);

    let residual = num_traits::Signed::abs(&(phat - (p_exact << mp::SHIFT)));
    // B√n/2 = π√(6n)/6
    let y_half = mp::fixmul(&pi, &mp::sqrt_fix(&(BigInt::from(6 * n) << mp::SHIFT))) / 6;
    let scaled = mp::fixdiv(&(residual * n), &mp::exp_fix(&y_half));
    mp::to_f64(&scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::PartitionCache;
    use num_traits::ToPrimitive;

    #[test]
    fn b_constant() {
        let b: f64 = hardy_b();
        assert!((b - 2.0 * std::f64::consts::PI / 6.0f64.sqrt()).abs() < 1e-15);
        assert!((b - 2.565099660323728).abs() < 1e-12);
    }

    #[test]
    fn phat_at_unit_exponent() {
        // x with B√x = 2: p̂ = e²/(4√3 x) · (1/2)
        let b: f64 = hardy_b();
        let x = (2.0 / b).powi(2);
        let expected = 2f64.exp() / (4.0 * 3f64.sqrt() * x) * 0.5;
        let got: f64 = hardy_ramanujan_phat(x).unwrap();
        assert!((got / expected - 1.0).abs() < 1e-13);
    }

    #[test]
    fn phat_domain_error() {
        let b: f64 = hardy_b();
        assert!(hardy_ramanujan_phat(1.0 / (b * b)).is_err());
        assert!(hardy_ramanujan_phat(0.5 / (b * b)).is_err());
        assert!(hardy_ramanujan_phat(1.01 / (b * b)).is_ok());
    }

    #[test]
    fn phat_tracks_p100() {
        let mut cache = PartitionCache::new();
        let p100 = cache.partition_count(100).unwrap().to_f64().unwrap();
        let approx: f64 = hardy_ramanujan_phat(100.0 - 1.0 / 24.0).unwrap();
        assert!((p100 / approx - 1.0).abs() < 0.02);
    }

    #[test]
    fn phat_monotone_from_one() {
        let mut prev: f64 = hardy_ramanujan_phat(1.0).unwrap();
        for k in 1..=400 {
            let x = 1.0 + k as f64 * 0.25;
            let cur: f64 = hardy_ramanujan_phat(x).unwrap();
            assert!(cur > prev, "p̂ not increasing at x = {x}");
            prev = cur;
        }
    }

    #[test]
    fn phat_log_matches_float_path() {
        for &x in &[1.0, 10.0, 400.0, 12345.6] {
            let plain: f64 = hardy_ramanujan_phat(x).unwrap();
            let logged = hardy_ramanujan_phat_log(x).unwrap();
            assert!((logged.ln() - plain.ln()).abs() < 1e-12);
        }
        // far beyond binary64: only the log path survives
        let big = hardy_ramanujan_phat_log(1e12).unwrap();
        assert!(big.ln() > 2_000_000.0);
    }

    #[test]
    fn ratio_approx_examples() {
        assert_eq!(partition_ratio_approx(123.0f64, 0.0), 1.0);
        let b: f64 = hardy_b();
        let got = partition_ratio_approx(10_000.0f64, 100.0);
        assert!((got - (b / 2.0).exp()).abs() < 1e-12);
    }

    #[test]
    fn ratio_approx_against_exact_p() {
        let mut cache = PartitionCache::new();
        let p2550 = cache.partition_count(2550).unwrap();
        let p2500 = cache.partition_count(2500).unwrap();
        let exact = LogScaled::<f64>::from_bigint(&p2550)
            .ratio(&LogScaled::<f64>::from_bigint(&p2500));
        let approx = partition_ratio_approx(2500.0f64, 50.0);
        assert!(
            (exact / approx - 1.0).abs() < 0.05,
            "exact {exact} vs approx {approx}"
        );
    }

    #[test]
    fn residual_scaled_small_n_matches_f64_route() {
        // At n = 100 binary64 still resolves the residual; the fixed-point
        // route must agree with the straightforward one.
        let mut cache = PartitionCache::new();
        let p100 = cache.partition_count(100).unwrap();
        let b: f64 = hardy_b();
        let plain = (p100.to_f64().unwrap() - hardy_ramanujan_phat(100.0 - 1.0 / 24.0).unwrap())
            .abs()
            * 100.0
            * (-b * 10.0 / 2.0).exp();
        let hi = lemma1_residual_scaled(&p100, 100);
        assert!(
            (hi / plain - 1.0).abs() < 1e-6,
            "hi-prec {hi} vs f64 {plain}"
        );
    }
}
