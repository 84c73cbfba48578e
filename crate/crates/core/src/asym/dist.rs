//! Empirical distribution of the scaled rank statistic against the
//! standard normal limit.

use num_bigint::BigInt;
use num_traits::Zero;

use super::normal::normal_cdf;
use crate::concave::vdm_exact;
use crate::numtheory::PartitionCache;
use crate::{Error, Result};

/// Largest weight accepted for exact distribution computation.
pub const EXACT_BUDGET: u64 = 40_000;

/// One sample of the comparison: the exact rank CDF of weight-`N`
/// compositions at `x` (in units of `(6N/π²)^{1/4}`) next to `Φ(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub x: f64,
    pub empirical: f64,
    pub gaussian: f64,
}

/// The empirical-vs-Gaussian curve at a fixed weight.
///
/// The empirical column is non-decreasing; it reaches exactly 1 once the
/// grid passes the largest attained rank over the scale factor.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionCurve {
    pub n: u64,
    pub points: Vec<CurvePoint>,
}

impl DistributionCurve {
    /// Largest pointwise distance to the Gaussian over the sampled grid.
    pub fn sup_abs_diff(&self) -> f64 {
        self.points
            .iter()
            .map(|p| (p.empirical - p.gaussian).abs())
            .fold(0.0, f64::max)
    }

    /// CSV with header `x,empirical,gaussian,abs_diff`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,empirical,gaussian,abs_diff\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{}\n",
                p.x,
                fmt_real12(p.empirical),
                fmt_real12(p.gaussian),
                fmt_real12((p.empirical - p.gaussian).abs())
            ));
        }
        out
    }

    /// JSON array of the same records.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.points
                .iter()
                .map(|p| {
                    serde_json::json!({
                        "x": p.x,
                        "empirical": p.empirical,
                        "gaussian": p.gaussian,
                        "abs_diff": (p.empirical - p.gaussian).abs(),
                    })
                })
                .collect(),
        )
    }
}

/// Stable 12-significant-digit rendering for computed reals.
pub fn fmt_real12(v: f64) -> String {
    format!("{:.11e}", v)
}

/// Exact `Ψ_N`: for each grid point x, the mass of ranks
/// `m <= (6N/π²)^{1/4} x` among weight-`N` strongly concave compositions,
/// next to `Φ(x)`. Sums are exact big integers, converted at the end.
pub fn empirical_rank_cdf(
    cache: &mut PartitionCache,
    n: u64,
    xs: &[f64],
) -> Result<DistributionCurve> {
    if n == 0 || n > EXACT_BUDGET {
        return Err(Error::BoundExceeded {
            what: "exact rank distribution weight",
            bound: EXACT_BUDGET,
            got: n,
        });
    }
    // ranks with support: |m| <= mmax where mmax(mmax+1)/2 <= n
    let mut mmax = 0u64;
    while (mmax + 1) * (mmax + 2) / 2 <= n {
        mmax += 1;
    }
    let counts: Vec<BigInt> = (0..=mmax)
        .map(|m| vdm_exact(cache, m as i64, n))
        .collect::<Result<_>>()?;

    // prefix[k + mmax] = Σ_{m = -mmax..=k} V_d(m, N)
    let len = 2 * mmax as usize + 1;
    let mut prefix = Vec::with_capacity(len);
    let mut running = BigInt::zero();
    for idx in 0..len {
        let m = idx as i64 - mmax as i64;
        running += &counts[m.unsigned_abs() as usize];
        prefix.push(running.clone());
    }
    let total = prefix[len - 1].clone();

    let scale = (6.0 * n as f64 / (std::f64::consts::PI * std::f64::consts::PI)).powf(0.25);
    let points = xs
        .iter()
        .map(|&x| {
            let threshold = (scale * x).floor();
            let empirical = if threshold < -(mmax as f64) {
                0.0
            } else if threshold >= mmax as f64 {
                1.0
            } else {
                let idx = (threshold as i64 + mmax as i64) as usize;
                big_ratio(&prefix[idx], &total)
            };
            CurvePoint {
                x,
                empirical,
                gaussian: normal_cdf(x),
            }
        })
        .collect();

    Ok(DistributionCurve { n, points })
}

/// `num/den` as f64 for exact nonnegative integers with num <= den,
/// accurate to the last bit via 64 extra binary digits.
fn big_ratio(num: &BigInt, den: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    if num == den {
        return 1.0;
    }
    if num.is_zero() {
        return 0.0;
    }
    ((num << 64u32) / den).to_f64().expect("ratio fits") / 2f64.powi(64)
}
