//! Acceptance suite: one test per verification criterion, each printing a
//! pass/fail line with the measured quantity. Exact equivalences carry
//! zero tolerance; the asymptotic checks use thresholds frozen after
//! measuring against the exact oracles.
//!
//! Run `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use once_cell::sync::Lazy;

use sccrank_core::asym::{
    empirical_rank_cdf, gaussian_ratio, lemma4_f, theorem1_estimate, vd_leading,
};
use sccrank_core::concave::{
    enumerate_scc, rank_table_oracle, vd_andrews, vd_fast, vd_product, vdm_exact, vdm_genfunc,
    vdm_region, vdm_telescoped,
};
use sccrank_core::numtheory::{
    chi_minus12, chi_minus3_at_odd, kronecker, lemma1_residual_scaled, PartitionCache,
};
use sccrank_core::series::jacobi_triple_check;
use sccrank_core::{Int, Log64};

/// Shared partition cache, filled once to the largest scale any
/// criterion touches; tests afterwards only read through the mutex.
static CACHE: Lazy<Mutex<PartitionCache>> = Lazy::new(|| {
    let mut cache = PartitionCache::new();
    cache.ensure(40_000).expect("partition cache fill");
    Mutex::new(cache)
});

fn report(name: &str, pass: bool, detail: &str) {
    println!(
        "acceptance {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{name}: {detail}");
}

#[test]
fn criterion_01_characters() {
    let start = Instant::now();
    let mut ok = true;
    for n in 0..=10_000u64 {
        ok &= chi_minus12(n) == kronecker(-12, n as i64);
        ok &= chi_minus3_at_odd(n) == kronecker(-3, 2 * n as i64 + 1);
    }
    let elapsed = start.elapsed();
    let pass = ok && elapsed < Duration::from_secs(1);
    report(
        "01 characters",
        pass,
        &format!("agreement to 10^4 in {elapsed:?}"),
    );
}

#[test]
fn criterion_02_jacobi_triple_product() {
    let start = Instant::now();
    let check = jacobi_triple_check(30);
    let elapsed = start.elapsed();
    let pass = check.ok && elapsed < Duration::from_secs(10);
    report(
        "02 jacobi-triple-product",
        pass,
        &format!(
            "order 30 in {elapsed:?}, first mismatch {:?}",
            check.first_mismatch
        ),
    );
}

#[test]
fn criterion_03_vd_four_way() {
    let start = Instant::now();
    let nmax = 40usize;
    let andrews = vd_andrews(nmax);
    let product = vd_product(nmax);
    let mut cache = CACHE.lock().unwrap();
    let mut ok = true;
    for n in 0..=nmax as u64 {
        let oracle = Int::from(enumerate_scc(n).unwrap().len() as u64);
        let fast = vd_fast(&mut cache, n).unwrap();
        ok &= &oracle == andrews.coeff(n as usize)
            && &oracle == product.coeff(n as usize)
            && oracle == fast;
    }
    let elapsed = start.elapsed();
    let pass = ok && elapsed < Duration::from_secs(120);
    report(
        "03 vd-four-way",
        pass,
        &format!("oracle = identity = product = fast for n <= 40 in {elapsed:?}"),
    );
}

#[test]
fn criterion_04_rank_three_way() {
    let nmax = 30u64;
    let oracle = rank_table_oracle(nmax).unwrap();
    let genfunc = vdm_genfunc(nmax as usize);
    let mut cache = CACHE.lock().unwrap();
    let mut ok = true;
    for n in 0..=nmax {
        let reach = oracle.max_rank(n).max(genfunc.max_rank(n)) as i64 + 1;
        for m in -reach..=reach {
            let want = oracle.get(m, n);
            let shift = vdm_exact(&mut cache, m, n).unwrap();
            let tel = vdm_telescoped(
                &mut cache,
                m.unsigned_abs(),
                n as i64 - (m.unsigned_abs() * (m.unsigned_abs() + 1) / 2) as i64,
            )
            .unwrap();
            ok &= genfunc.get(m, n) == want && shift == want && tel == want;
        }
    }
    report(
        "04 rank-three-way",
        ok,
        "oracle = expansion = shift sum = telescoped for n <= 30, all m",
    );
}

#[test]
fn criterion_05_region_formula() {
    let nmax = 30u64;
    let oracle = rank_table_oracle(nmax).unwrap();
    let mut cache = CACHE.lock().unwrap();
    let mut ok = true;
    let mut checked = 0u32;
    for m in -8i64..=8 {
        let am = m.unsigned_abs();
        let bound = am * (am + 5) / 2 + 4;
        for n in 0..bound.min(nmax + 1) {
            ok &= vdm_region(&mut cache, m, n as i64).unwrap() == oracle.get(m, n);
            checked += 1;
        }
    }
    report(
        "05 region-formula",
        ok,
        &format!("{checked} closed-form entries match the oracle"),
    );
}

#[test]
fn criterion_06_column_sums_and_symmetry() {
    let nmax = 30u64;
    let table = vdm_genfunc(nmax as usize);
    let mut cache = CACHE.lock().unwrap();
    let mut ok = true;
    for n in 0..=nmax {
        ok &= table.column_sum(n) == vd_fast(&mut cache, n).unwrap();
        for m in 0..=(table.max_rank(n) as i64) {
            ok &= table.get(m, n) == table.get(-m, n);
        }
    }
    report(
        "06 column-sums-symmetry",
        ok,
        "sum_m V_d(m,n) = V_d(n) and V_d(m,n) = V_d(-m,n) for n <= 30",
    );
}

#[test]
fn criterion_07_lemma1_residual() {
    let mut cache = CACHE.lock().unwrap();
    let mut worst = 0.0f64;
    for n in [100u64, 200, 500, 1000, 2000, 5000] {
        let p = cache.partition_count(n as i64).unwrap();
        worst = worst.max(lemma1_residual_scaled(&p, n));
    }
    let pass = worst <= 10.0;
    report(
        "07 lemma1-residual",
        pass,
        &format!("max scaled residual {worst:.4} <= 10 (measured ~0.10)"),
    );
}

#[test]
fn criterion_08_theorem1_uniform() {
    let mut cache = CACHE.lock().unwrap();
    cache.ensure(40_000).unwrap();
    let start = Instant::now();

    let max_rel_err = |cache: &mut PartitionCache, n: u64| -> f64 {
        let p = cache.partition_count(n as i64).unwrap();
        let ells = [
            0i64,
            (n as f64).powf(0.25) as i64,
            (n as f64).powf(0.375) as i64,
            (n as f64).sqrt() as i64,
        ];
        let mut worst = 0.0f64;
        for &ell in &ells {
            // exact V_d(ell, N + T(ell)) vs p(N) F(pi |ell| / sqrt(6N))
            let exact = sccrank_core::concave::vdm_prop1(cache, ell, n as i64).unwrap();
            let est = theorem1_estimate(ell, n, &p);
            worst = worst.max(Log64::from_bigint(&exact).rel_err(&est));
        }
        worst
    };

    let err_10k = max_rel_err(&mut cache, 10_000);
    let err_40k = max_rel_err(&mut cache, 40_000);
    let err_2k5 = max_rel_err(&mut cache, 2_500);
    let elapsed = start.elapsed();

    let pass = err_10k <= 0.15 && err_40k < err_2k5 && elapsed < Duration::from_secs(300);
    report(
        "08 theorem1-uniform",
        pass,
        &format!(
            "max rel err {err_10k:.4} at N=10^4 (<= 0.15); decay {err_2k5:.4} -> {err_40k:.4}; {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_09_leading_term() {
    let mut cache = CACHE.lock().unwrap();
    let ratio_at = |cache: &mut PartitionCache, n: u64| -> f64 {
        let exact = vd_fast(cache, n).unwrap();
        Log64::from_bigint(&exact).ratio(&vd_leading(n))
    };
    let r20k = ratio_at(&mut cache, 20_000);
    let r2k = ratio_at(&mut cache, 2_000);
    let pass = (0.9..=1.1).contains(&r20k) && (r20k - 1.0).abs() < (r2k - 1.0).abs();
    report(
        "09 leading-term",
        pass,
        &format!("V_d/leading = {r2k:.5} at N=2000, {r20k:.5} at N=20000"),
    );
}

#[test]
fn criterion_10_gaussian_ratio() {
    let n = 10_000u64;
    let mut cache = CACHE.lock().unwrap();
    let vd_n = vd_fast(&mut cache, n).unwrap();
    let vd_n_log = Log64::from_bigint(&vd_n);
    let mut worst = 0.0f64;
    // m in {0, floor(N^{1/8}), floor(N^{1/4})}
    for m in [0i64, 3, 10] {
        let exact_m = vdm_exact(&mut cache, m, n).unwrap();
        let exact_ratio = Log64::from_bigint(&exact_m).ratio(&vd_n_log);
        let rel = (exact_ratio / gaussian_ratio(m, n) - 1.0).abs();
        worst = worst.max(rel);
    }
    let pass = worst <= 0.10;
    report(
        "10 gaussian-ratio",
        pass,
        &format!("max rel deviation {worst:.5} <= 0.10 at N=10^4"),
    );
}

#[test]
fn criterion_11_distribution() {
    let xs: Vec<f64> = (-40..=40).map(|i| i as f64 * 0.1).collect();
    let mut cache = CACHE.lock().unwrap();
    let sup_3000 = empirical_rank_cdf(&mut cache, 3_000, &xs)
        .unwrap()
        .sup_abs_diff();
    let sup_300 = empirical_rank_cdf(&mut cache, 300, &xs)
        .unwrap()
        .sup_abs_diff();
    let pass = sup_3000 <= 0.08 && sup_3000 < sup_300;
    report(
        "11 distribution",
        pass,
        &format!("sup distance {sup_300:.4} at N=300 -> {sup_3000:.4} at N=3000 (<= 0.08)"),
    );
}

#[test]
fn criterion_12_lemma4() {
    let d2 = (lemma4_f(1e-2f64, 0) - 1.0).abs();
    let d3 = (lemma4_f(1e-3f64, 0) - 1.0).abs();
    let d4 = (lemma4_f(1e-4f64, 0) - 1.0).abs();
    let pass = d3 < d2 && d4 < d3 && d4 < 0.05;
    report(
        "12 lemma4",
        pass,
        &format!("deviations {d2:.6} -> {d3:.6} -> {d4:.6}, final < 0.05"),
    );
}
