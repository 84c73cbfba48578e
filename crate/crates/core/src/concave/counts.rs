//! Independent exact routes to `V_d(n)` and `V_d(m, n)`.
//!
//! Four ways to the univariate counts: the enumeration oracle, the
//! character identity `v_d(q) = 2(−q;q)²_∞ Σ (−12/k) q^{(k²−1)/24} −
//! Σ (−1)^j q^{j(j+1)/2}`, the defining product sum
//! `Σ_c (−q^{c+1};q)²_∞ q^c`, and a partition-shift sum per rank. Three
//! ways to the bivariate table: the oracle, the `(x, q)` expansion, and
//! the shift sum (plus its telescoped regrouping). Their pairwise
//! agreement is the backbone of the verification suite.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::composition::enumerate_scc;
use super::table::RankTable;
use crate::numtheory::{chi_minus12, chi_minus3_at_odd, PartitionCache};
use crate::series::{inverse_euler, poch_neg, rank_poch_product};
use crate::{Int, Result, Series, XqSeries};

/// `v_d(q)` by the character identity; coefficient of `q^n` is `V_d(n)`.
pub fn vd_andrews(nmax: usize) -> Series {
    let distinct = poch_neg(1, nmax);
    let two_distinct_sq = (&distinct * &distinct).scalar_mul(&Int::from(2));

    let mut char_sum = Series::zero(nmax);
    let mut k = 1u64;
    while (k * k - 1) as usize <= 24 * nmax {
        let chi = chi_minus12(k);
        if chi != 0 {
            assert_eq!((k * k - 1) % 24, 0, "character support must be coprime to 12");
            let e = ((k * k - 1) / 24) as usize;
            char_sum.set_coeff(e, Int::from(chi));
        }
        k += 1;
    }

    let main = &two_distinct_sq * &char_sum;
    &main - &false_theta(nmax)
}

/// `Σ_{j≥0} (−1)^j q^{j(j+1)/2}` truncated.
fn false_theta(nmax: usize) -> Series {
    let mut theta = Series::zero(nmax);
    let mut j = 0u64;
    while (j * (j + 1) / 2) as usize <= nmax {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        theta.set_coeff((j * (j + 1) / 2) as usize, Int::from(sign));
        j += 1;
    }
    theta
}

/// `v_d(q)` from the defining sum over the center value:
/// `Σ_{c=0}^{nmax} (−q^{c+1};q)²_∞ q^c`.
pub fn vd_product(nmax: usize) -> Series {
    let mut acc = Series::zero(nmax);
    // march the center downwards so each Pochhammer extends the previous
    // one by a single binomial factor
    let mut poch = Series::one(nmax); // (−q^{c+1};q)_∞ at c = nmax
    let one = Int::one();
    for c in (0..=nmax).rev() {
        let sq = &poch * &poch;
        acc = &acc + &sq.shifted(c);
        if c > 0 {
            poch.mul_binomial(c, &one);
        }
    }
    acc
}

/// `v(q) = Σ_{c≥0} q^c/(q^{c+1};q)²_∞`; coefficient of `q^n` counts the
/// (weakly) concave compositions of `n`.
pub fn v_concave(nmax: usize) -> Series {
    let mut acc = Series::zero(nmax);
    let minus_one = -Int::one();
    let mut inv = inverse_euler(nmax); // 1/(q^{c+1};q)_∞ at c = 0
    for c in 0..=nmax {
        acc = &acc + &(&inv * &inv).shifted(c);
        if c + 1 <= nmax {
            inv.mul_binomial(c + 1, &minus_one);
        }
    }
    acc
}

/// Aggregate the enumeration oracle by rank.
pub fn rank_table_oracle(nmax: u64) -> Result<RankTable> {
    let mut cols = Vec::with_capacity(nmax as usize + 1);
    for n in 0..=nmax {
        let mut signed: BTreeMap<i64, BigInt> = BTreeMap::new();
        for comp in enumerate_scc(n)? {
            *signed.entry(comp.rank()).or_insert_with(BigInt::zero) += 1u32;
        }
        cols.push(fold_symmetric_column(&signed, n));
    }
    Ok(RankTable::from_nonnegative_columns(cols))
}

/// Check the rank-negation symmetry of a signed column and keep m >= 0.
fn fold_symmetric_column(signed: &BTreeMap<i64, BigInt>, n: u64) -> BTreeMap<u64, BigInt> {
    let mut out = BTreeMap::new();
    for (&m, c) in signed {
        assert!(
            !c.is_negative(),
            "negative count {c} at rank {m}, weight {n}"
        );
        let mirror = signed.get(&-m).cloned().unwrap_or_else(BigInt::zero);
        assert_eq!(
            c, &mirror,
            "rank symmetry broken at weight {n}: counts({m}) != counts({})",
            -m
        );
        if m >= 0 {
            out.insert(m as u64, c.clone());
        }
    }
    out
}

/// `V_d(m, n)` table from the `(x, q)` expansion
/// `−Σ_j (−1)^j q^{j(j+1)/2} x^{2j+1} + (−x;q)_∞(−x^{−1}q;q)_∞ ·
/// Σ_k (−12/k) x^{(k−1)/2} q^{(k²−1)/24}`.
pub fn vdm_genfunc(nmax: usize) -> RankTable {
    let rp = rank_poch_product(nmax);

    let mut char_x = XqSeries::zero(nmax);
    let mut k = 1u64;
    while (k * k - 1) as usize <= 24 * nmax {
        let chi = chi_minus12(k);
        if chi != 0 {
            // the support is odd, so the x-exponent (k−1)/2 is integral
            assert_eq!(k % 2, 1);
            assert_eq!((k * k - 1) % 24, 0);
            char_x.add_term(((k * k - 1) / 24) as usize, ((k - 1) / 2) as i64, Int::from(chi));
        }
        k += 1;
    }

    let mut theta_x = XqSeries::zero(nmax);
    let mut j = 0u64;
    while (j * (j + 1) / 2) as usize <= nmax {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        theta_x.add_term((j * (j + 1) / 2) as usize, (2 * j + 1) as i64, Int::from(sign));
        j += 1;
    }

    let expansion = &(&rp * &char_x) - &theta_x;

    let mut cols = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let signed: BTreeMap<i64, BigInt> = expansion
            .col(n)
            .iter()
            .map(|(&m, c)| (m, c.clone()))
            .collect();
        cols.push(fold_symmetric_column(&signed, n as u64));
    }
    RankTable::from_nonnegative_columns(cols)
}

/// `V_d(ℓ, N + |ℓ|(|ℓ|+1)/2)` as the character-weighted partition sum
/// `Σ_{k≥0} (−3/(2k+1)) p(N − 2k(k+1)/3 − k|ℓ|)`.
///
/// Negative `N` gives 0 through the `p(negative) = 0` convention; `ℓ` of
/// either sign reduces to `|ℓ|` by the rank symmetry.
pub fn vdm_prop1(cache: &mut PartitionCache, ell: i64, n: i64) -> Result<BigInt> {
    let l = ell.unsigned_abs();
    let mut acc = BigInt::zero();
    if n >= 0 {
        let n_u = n as u64;
        let mut k = 0u64;
        loop {
            let chi = chi_minus3_at_odd(k);
            if chi == 0 {
                k += 1;
                continue;
            }
            assert_eq!((2 * k * (k + 1)) % 3, 0, "non-integral exponent at k={k}");
            let shift = 2 * k * (k + 1) / 3 + k * l;
            if shift > n_u {
                break;
            }
            let term = cache.partition_count((n_u - shift) as i64)?;
            if chi > 0 {
                acc += term;
            } else {
                acc -= term;
            }
            k += 1;
        }
    }
    assert!(!acc.is_negative(), "count must be nonnegative");
    Ok(acc)
}

/// The same sum regrouped into telescoping differences:
/// `Σ_{k≥0} [p(N − Q1(k,ℓ)) − p(N − Q2(k,ℓ))]` with
/// `Q1 = 2k(3k+1) + 3kℓ` and `Q2 = Q1 + (8k + 4 + 2ℓ)`.
pub fn vdm_telescoped(cache: &mut PartitionCache, ell: u64, n: i64) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    if n >= 0 {
        let n_u = n as u64;
        let mut k = 0u64;
        loop {
            let q1 = 2 * k * (3 * k + 1) + 3 * k * ell;
            if q1 > n_u {
                break;
            }
            let q2 = q1 + 8 * k + 4 + 2 * ell;
            acc += cache.partition_count((n_u - q1) as i64)?;
            acc -= cache.partition_count(n_u as i64 - q2 as i64)?;
            k += 1;
        }
    }
    Ok(acc)
}

/// Closed form `V_d(m, n) = p(n − |m|(|m|+1)/2)`, valid exactly on
/// `0 <= n < |m|(|m|+5)/2 + 4`.
pub fn vdm_region(cache: &mut PartitionCache, m: i64, n: i64) -> Result<BigInt> {
    let am = m.unsigned_abs();
    let bound = (am * (am + 5) / 2 + 4) as i64;
    if n < 0 || n >= bound {
        return Err(crate::Error::OutsideRegion { m, n });
    }
    cache.partition_count(n - (am * (am + 1) / 2) as i64)
}

/// `V_d(m, n)` for arbitrary rank and weight, via the shift sum.
pub fn vdm_exact(cache: &mut PartitionCache, m: i64, n: u64) -> Result<BigInt> {
    let t = m.unsigned_abs() * (m.unsigned_abs() + 1) / 2;
    vdm_prop1(cache, m, n as i64 - t as i64)
}

/// The full `V_d(m, n)` table for `n <= nmax` through the shift sum —
/// the scalable route, no enumeration involved.
pub fn rank_table_prop1(cache: &mut PartitionCache, nmax: u64) -> Result<RankTable> {
    let mut cols = Vec::with_capacity(nmax as usize + 1);
    for n in 0..=nmax {
        let mut col = BTreeMap::new();
        let mut m = 0u64;
        while m * (m + 1) / 2 <= n {
            let count = vdm_prop1(cache, m as i64, n as i64 - (m * (m + 1) / 2) as i64)?;
            col.insert(m, count);
            m += 1;
        }
        cols.push(col);
    }
    Ok(RankTable::from_nonnegative_columns(cols))
}

/// `V_d(n) = Σ_m V_d(m, n)` summed over the O(√n) ranks with support,
/// using the sign symmetry. O(n) partition lookups per call.
pub fn vd_fast(cache: &mut PartitionCache, n: u64) -> Result<BigInt> {
    let mut acc = vdm_exact(cache, 0, n)?;
    let mut m = 1u64;
    while m * (m + 1) / 2 <= n {
        acc += vdm_exact(cache, m as i64, n)? * 2u32;
        m += 1;
    }
    Ok(acc)
}
