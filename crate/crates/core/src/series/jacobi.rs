//! Coefficientwise verification of the Jacobi triple product
//! `(q;q)_∞ (−xq;q)_∞ (−x^{−1};q)_∞ = Σ_{n∈Z} q^{n(n+1)/2} x^n`.

use num_traits::One;

use super::products::euler;
use crate::{Int, XqSeries};

/// Outcome of a triple-product check up to a q-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiCheck {
    pub order: usize,
    pub ok: bool,
    /// First `(q-power, x-exponent)` where the sides disagree.
    pub first_mismatch: Option<(usize, i64)>,
}

/// Expand both sides as rank series and compare every coefficient up to
/// the order.
pub fn jacobi_triple_check(order: usize) -> JacobiCheck {
    let one = Int::one();

    let mut lhs = XqSeries::from_univariate(&euler(order));
    for j in 1..=order {
        lhs.mul_binomial(j, 1, &one); // (−xq;q)_∞
    }
    lhs.mul_binomial(0, -1, &one); // the 1 + x^{−1} factor of (−x^{−1};q)_∞
    for j in 1..=order {
        lhs.mul_binomial(j, -1, &one);
    }

    // Σ_{n∈Z} q^{n(n+1)/2} x^n: pairs n = k and n = −k−1 share the
    // triangular exponent k(k+1)/2; everything larger vanishes mod the
    // truncation.
    let mut rhs = XqSeries::zero(order);
    let mut k = 0usize;
    loop {
        let tri = k * (k + 1) / 2;
        if tri > order {
            break;
        }
        rhs.add_term(tri, k as i64, one.clone());
        rhs.add_term(tri, -(k as i64) - 1, one.clone());
        k += 1;
    }

    let first_mismatch = lhs.first_mismatch(&rhs);
    JacobiCheck {
        order,
        ok: first_mismatch.is_none(),
        first_mismatch,
    }
}
