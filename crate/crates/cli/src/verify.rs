//! The verification suites behind `sccrank verify`. Exact checks compare
//! independent computation routes bit-for-bit; asymptotic checks assert
//! the registered thresholds, which correspond to the default scales.

use sccrank_core::asym::{
    empirical_rank_cdf, gaussian_ratio, lemma4_f, theorem1_estimate, vd_leading, EXACT_BUDGET,
};
use sccrank_core::concave::{
    enumerate_scc, rank_table_oracle, rank_table_prop1, vd_andrews, vd_fast, vd_product,
    vdm_genfunc, vdm_prop1, vdm_region,
};
use sccrank_core::numtheory::{
    chi_minus12, chi_minus3_at_odd, kronecker, lemma1_residual_scaled, PartitionCache,
};
use sccrank_core::series::jacobi_triple_check;
use sccrank_core::{Int, Log64, Result};

use crate::Suite;

pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

pub fn run_suite(suite: Suite, max: Option<u64>) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Characters => characters(max),
        Suite::Identities => identities(max)?,
        Suite::Oracle => oracle_suite(max)?,
        Suite::Asymptotic => asymptotic(max)?,
        Suite::Distribution => distribution(max)?,
        Suite::All => {
            let mut all = characters(None);
            all.extend(identities(None)?);
            all.extend(oracle_suite(None)?);
            all.extend(asymptotic(None)?);
            all.extend(distribution(None)?);
            all
        }
    })
}

fn characters(max: Option<u64>) -> Vec<Check> {
    let bound = max.unwrap_or(10_000);
    let mut chi12_ok = true;
    let mut chi3_ok = true;
    for n in 0..=bound {
        chi12_ok &= chi_minus12(n) == kronecker(-12, n as i64);
        chi3_ok &= chi_minus3_at_odd(n) == kronecker(-3, 2 * n as i64 + 1);
    }
    vec![
        check(
            "characters/chi-12",
            chi12_ok,
            format!("residue table vs Kronecker symbol for n <= {bound}"),
        ),
        check(
            "characters/chi-3-odd",
            chi3_ok,
            format!("residue table vs Kronecker symbol for n <= {bound}"),
        ),
    ]
}

fn identities(max: Option<u64>) -> Result<Vec<Check>> {
    let m = max.unwrap_or(40);
    let mut out = Vec::new();

    let order = m.min(60) as usize;
    let jacobi = jacobi_triple_check(order);
    out.push(check(
        "identities/jacobi-triple-product",
        jacobi.ok,
        format!(
            "coefficientwise to q^{order}, first mismatch {:?}",
            jacobi.first_mismatch
        ),
    ));

    let enum_bound = m.min(40);
    let andrews = vd_andrews(m as usize);
    let product = vd_product(m as usize);
    let mut cache = PartitionCache::new();
    let mut four_ok = true;
    for n in 0..=enum_bound {
        let oracle = Int::from(enumerate_scc(n)?.len() as u64);
        four_ok &= &oracle == andrews.coeff(n as usize)
            && &oracle == product.coeff(n as usize)
            && oracle == vd_fast(&mut cache, n)?;
    }
    out.push(check(
        "identities/vd-four-way",
        four_ok,
        format!("oracle = identity = product = fast for n <= {enum_bound}"),
    ));

    if m > enum_bound {
        let mut series_ok = true;
        for n in 0..=m {
            series_ok &= andrews.coeff(n as usize) == product.coeff(n as usize)
                && andrews.coeff(n as usize) == &vd_fast(&mut cache, n)?;
        }
        out.push(check(
            "identities/vd-three-way-series",
            series_ok,
            format!("identity = product = fast for n <= {m}"),
        ));
    }
    Ok(out)
}

fn oracle_suite(max: Option<u64>) -> Result<Vec<Check>> {
    let nmax = max.unwrap_or(30).min(40);
    let oracle = rank_table_oracle(nmax)?;
    let genfunc = vdm_genfunc(nmax as usize);
    let mut cache = PartitionCache::new();
    let prop1 = rank_table_prop1(&mut cache, nmax)?;

    let three_way = oracle == genfunc && oracle == prop1;

    let mut sums_ok = true;
    let mut support_ok = true;
    for n in 0..=nmax {
        sums_ok &= oracle.column_sum(n) == vd_fast(&mut cache, n)?;
        let reach = oracle.max_rank(n) as i64 + 1;
        for mm in 0..=reach {
            let t = (mm * (mm + 1) / 2) as u64;
            support_ok &= (oracle.get(mm, n) == Int::from(0)) == (n < t);
        }
    }

    let mut region_ok = true;
    for mm in -8i64..=8 {
        let am = mm.unsigned_abs();
        for n in 0..(am * (am + 5) / 2 + 4).min(nmax + 1) {
            region_ok &= vdm_region(&mut cache, mm, n as i64)? == oracle.get(mm, n);
        }
    }

    Ok(vec![
        check(
            "oracle/rank-three-way",
            three_way,
            format!("enumeration = expansion = shift sum for n <= {nmax}, all m"),
        ),
        check(
            "oracle/column-sums-symmetry",
            sums_ok,
            "tables store m >= 0 once; sums match V_d(n)",
        ),
        check(
            "oracle/support",
            support_ok,
            "V_d(m,n) = 0 exactly below the triangular weight",
        ),
        check(
            "oracle/region-formula",
            region_ok,
            "closed partition form inside its validity region, |m| <= 8",
        ),
    ])
}

fn asymptotic(max: Option<u64>) -> Result<Vec<Check>> {
    let scale = max.unwrap_or(40_000).clamp(400, 100_000);
    let mut cache = PartitionCache::new();
    cache.ensure(scale)?;
    let mut out = Vec::new();

    let mut worst_resid = 0.0f64;
    for n in [100u64, 200, 500, 1000, 2000, 5000] {
        if n > scale / 8 {
            break;
        }
        let p = cache.partition_count(n as i64)?;
        worst_resid = worst_resid.max(lemma1_residual_scaled(&p, n));
    }
    out.push(check(
        "asymptotic/lemma1-residual",
        worst_resid <= 10.0,
        format!("max scaled residual {worst_resid:.4} <= 10"),
    ));

    let max_err = |cache: &mut PartitionCache, n: u64| -> Result<f64> {
        let p = cache.partition_count(n as i64)?;
        let mut worst = 0.0f64;
        for ell in [
            0i64,
            (n as f64).powf(0.25) as i64,
            (n as f64).powf(0.375) as i64,
            (n as f64).sqrt() as i64,
        ] {
            let exact = vdm_prop1(cache, ell, n as i64)?;
            let est = theorem1_estimate(ell, n, &p);
            worst = worst.max(Log64::from_bigint(&exact).rel_err(&est));
        }
        Ok(worst)
    };
    let err_mid = max_err(&mut cache, scale / 4)?;
    let err_hi = max_err(&mut cache, scale)?;
    let err_lo = max_err(&mut cache, scale / 16)?;
    out.push(check(
        "asymptotic/theorem1-tolerance",
        err_mid <= 0.15,
        format!("max rel err {err_mid:.4} <= 0.15 at N={}", scale / 4),
    ));
    out.push(check(
        "asymptotic/theorem1-decay",
        err_hi < err_lo,
        format!("{err_lo:.4} at N={} -> {err_hi:.4} at N={scale}", scale / 16),
    ));

    let ratio_at = |cache: &mut PartitionCache, n: u64| -> Result<f64> {
        Ok(Log64::from_bigint(&vd_fast(cache, n)?).ratio(&vd_leading(n)))
    };
    let r_hi = ratio_at(&mut cache, scale / 2)?;
    let r_lo = ratio_at(&mut cache, scale / 20)?;
    out.push(check(
        "asymptotic/leading-term",
        (0.9..=1.1).contains(&r_hi) && (r_hi - 1.0).abs() < (r_lo - 1.0).abs(),
        format!(
            "V_d/leading {r_lo:.5} at N={} -> {r_hi:.5} at N={}",
            scale / 20,
            scale / 2
        ),
    ));

    let n_g = scale / 4;
    let vd_log = Log64::from_bigint(&vd_fast(&mut cache, n_g)?);
    let mut worst_g = 0.0f64;
    for m in [
        0i64,
        (n_g as f64).powf(0.125) as i64,
        (n_g as f64).powf(0.25) as i64,
    ] {
        let exact =
            vdm_prop1(&mut cache, m, n_g as i64 - m * (m + 1) / 2)?;
        let ratio = Log64::from_bigint(&exact).ratio(&vd_log);
        worst_g = worst_g.max((ratio / gaussian_ratio(m, n_g) - 1.0).abs());
    }
    out.push(check(
        "asymptotic/gaussian-ratio",
        worst_g <= 0.10,
        format!("max rel deviation {worst_g:.5} <= 0.10 at N={n_g}"),
    ));

    let d2 = (lemma4_f(1e-2f64, 0) - 1.0).abs();
    let d3 = (lemma4_f(1e-3f64, 0) - 1.0).abs();
    let d4 = (lemma4_f(1e-4f64, 0) - 1.0).abs();
    out.push(check(
        "asymptotic/lemma4",
        d3 < d2 && d4 < d3 && d4 < 0.05,
        format!("profile sum deviations {d2:.6} -> {d3:.6} -> {d4:.6}"),
    ));

    Ok(out)
}

fn distribution(max: Option<u64>) -> Result<Vec<Check>> {
    let n = max.unwrap_or(3_000).clamp(50, EXACT_BUDGET);
    let xs: Vec<f64> = (-40..=40).map(|i| i as f64 * 0.1).collect();
    let mut cache = PartitionCache::new();
    let sup_hi = empirical_rank_cdf(&mut cache, n, &xs)?.sup_abs_diff();
    let sup_lo = empirical_rank_cdf(&mut cache, (n / 10).max(30), &xs)?.sup_abs_diff();
    Ok(vec![check(
        "distribution/gaussian-limit",
        sup_hi <= 0.08 && sup_hi < sup_lo,
        format!(
            "sup |Psi_N - Phi| {sup_lo:.4} at N={} -> {sup_hi:.4} at N={n} (<= 0.08)",
            (n / 10).max(30)
        ),
    )])
}
