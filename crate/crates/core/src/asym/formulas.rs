//! The closed asymptotic expressions: the rank profile F, the uniform
//! main term for V_d(ℓ, ·), the leading term for V_d(N), the Gaussian
//! ratio, and the profile-normalization sum f(α).

use num_bigint::BigInt;

use super::LogScaled;
use crate::scalar::Real;

/// `F(α) = (1 + e^{−α}) / (1 + e^{−α} + e^{−2α})` for α ≥ 0.
///
/// Strictly increasing from F(0) = 2/3 towards 1.
pub fn profile_f<R: Real>(alpha: R) -> R {
    assert!(alpha >= R::zero(), "profile defined for alpha >= 0");
    let e1 = (-alpha).exp();
    let e2 = e1 * e1;
    (R::one() + e1) / (R::one() + e1 + e2)
}

/// Main term `p(N) · F(π|ℓ|/√(6N))` of the uniform rank asymptotic, in
/// log scale. `p_of_n` must be the exact `p(N)`.
pub fn theorem1_estimate(ell: i64, n: u64, p_of_n: &BigInt) -> LogScaled<f64> {
    assert!(n >= 1);
    let alpha = std::f64::consts::PI * ell.unsigned_abs() as f64 / (6.0 * n as f64).sqrt();
    let f = profile_f(alpha);
    LogScaled::from_ln(LogScaled::<f64>::from_bigint(p_of_n).ln() + f.ln())
}

/// Leading term `2^{−1/4} 3^{−5/4} N^{−3/4} e^{2π√(N/6)}` of the V_d(N)
/// expansion, in log scale.
pub fn vd_leading(n: u64) -> LogScaled<f64> {
    assert!(n >= 1);
    let nf = n as f64;
    let ln = -0.25 * 2f64.ln() - 1.25 * 3f64.ln() - 0.75 * nf.ln()
        + 2.0 * std::f64::consts::PI * (nf / 6.0).sqrt();
    LogScaled::from_ln(ln)
}

/// Gaussian profile `(24N)^{−1/4} exp(−π m²/√(24N))` approximating
/// `V_d(m, N)/V_d(N)`.
pub fn gaussian_ratio(m: i64, n: u64) -> f64 {
    assert!(n >= 1);
    let t = 24.0 * n as f64;
    let m2 = (m * m) as f64;
    t.powf(-0.25) * (-std::f64::consts::PI * m2 / t.sqrt()).exp()
}

/// `f(α) = α Σ_{n≥0} (4n + ℓ) e^{−2αn² − αnℓ}` by direct summation,
/// truncated when a term falls below 10^{−18} of the running total on the
/// decreasing side of the (unimodal) summand.
pub fn lemma4_f<R: Real>(alpha: R, ell: u64) -> R {
    assert!(alpha > R::zero(), "summation needs alpha > 0");
    let cutoff = R::from_f64(1e-18).unwrap();
    let ell_r = R::from_u64(ell).unwrap();
    let four = R::from_u32(4).unwrap();
    let two = R::one() + R::one();
    let mut total = R::zero();
    let mut prev_term = R::zero();
    let mut n = 0u64;
    loop {
        let nr = R::from_u64(n).unwrap();
        let weight = four * nr + ell_r;
        let term = weight * (-alpha * nr * (two * nr + ell_r)).exp();
        let done = term < prev_term && term < cutoff * total;
        total = total + term;
        if done {
            break;
        }
        prev_term = term;
        n += 1;
        assert!(n < 100_000_000, "lemma4 summation runaway");
    }
    alpha * total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::PartitionCache;

    #[test]
    fn profile_values() {
        assert!((profile_f(0.0f64) - 2.0 / 3.0).abs() < 1e-15);
        assert!((profile_f(2f64.ln()) - 6.0 / 7.0).abs() < 1e-15);
        assert!((profile_f(60.0f64) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn profile_monotone_and_bounded() {
        let mut prev = 0.0f64;
        for i in 0..=2000 {
            let v = profile_f(i as f64 * 0.01);
            assert!(v > 0.66 && v <= 1.0);
            // strictly increasing until it saturates at 1 within rounding
            if prev < 1.0 - 1e-12 {
                assert!(v > prev, "not increasing at alpha = {}", i as f64 * 0.01);
            } else {
                assert!(v >= prev);
            }
            prev = v;
        }
    }

    #[test]
    fn theorem1_at_zero_is_two_thirds_of_p() {
        let mut cache = PartitionCache::new();
        let p = cache.partition_count(500).unwrap();
        let est = theorem1_estimate(0, 500, &p);
        let expected = LogScaled::<f64>::from_bigint(&p).ln() + (2.0f64 / 3.0).ln();
        assert!((est.ln() - expected).abs() < 1e-12);
    }

    #[test]
    fn theorem1_large_ell_saturates_to_p() {
        let mut cache = PartitionCache::new();
        let n = 400u64;
        let p = cache.partition_count(n as i64).unwrap();
        let ell = (20.0 * (n as f64).sqrt()).ceil() as i64;
        let est = theorem1_estimate(ell, n, &p);
        let rel = (est.ln() - LogScaled::<f64>::from_bigint(&p).ln()).exp() - 1.0;
        assert!(rel.abs() < 1e-3, "F should be ~1, deviation {rel}");
    }

    #[test]
    fn leading_constant() {
        // 2^{-1/4} 3^{-5/4} ≈ 0.21298
        let c = 2f64.powf(-0.25) * 3f64.powf(-1.25);
        assert!((c - 0.21298).abs() < 5e-6);
        let l = vd_leading(1);
        assert!((l.ln() - (c.ln() + 2.0 * std::f64::consts::PI / 6f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn gaussian_ratio_at_zero() {
        let n = 10_000u64;
        assert!((gaussian_ratio(0, n) - (24.0 * n as f64).powf(-0.25)).abs() < 1e-15);
        assert!(gaussian_ratio(5, n) < gaussian_ratio(0, n));
        assert_eq!(gaussian_ratio(5, n), gaussian_ratio(-5, n));
    }

    #[test]
    fn gaussian_ratio_normalizes() {
        let n = 10_000u64;
        let reach = 3.0 * (24.0 * n as f64).powf(0.25);
        let mut sum = 0.0;
        let mut m = -(reach.floor() as i64);
        while m as f64 <= reach {
            sum += gaussian_ratio(m, n);
            m += 1;
        }
        assert!((0.99..=1.01).contains(&sum), "profile sum {sum}");
    }

    #[test]
    fn lemma4_limit() {
        let f2 = (lemma4_f(1e-2f64, 0) - 1.0).abs();
        let f3 = (lemma4_f(1e-3f64, 0) - 1.0).abs();
        let f4 = (lemma4_f(1e-4f64, 0) - 1.0).abs();
        assert!(f2 < 0.15, "alpha=1e-2 deviation {f2}");
        assert!(f3 < f2 && f4 < f3, "deviations not decreasing: {f2} {f3} {f4}");
        assert!(f4 < 0.05, "alpha=1e-4 deviation {f4}");
    }

    #[test]
    fn lemma4_small_alpha_ell() {
        let d = (lemma4_f(1e-3f64, 10) - 1.0).abs();
        assert!(d < 0.15, "alpha=1e-3, ell=10 deviation {d}");
    }
}
