//! The concrete products the counting formulas are made of. Infinite
//! products are truncated by the q-degree of each factor, never by a
//! factor count, so every result is exact modulo `q^{order+1}`.

use num_traits::One;

use crate::{Int, Series, XqSeries};

/// Euler's product `(q;q)_∞ = Π_{j≥1} (1 − q^j)`, truncated.
pub fn euler(order: usize) -> Series {
    let minus_one = -Int::one();
    let mut s = Series::one(order);
    for j in 1..=order {
        s.mul_binomial(j, &minus_one);
    }
    s
}

/// `(−q^{shift};q)_∞ = Π_{j≥0} (1 + q^{shift+j})` truncated; factors with
/// degree beyond the order contribute 1 and are dropped.
pub fn poch_neg(shift: u64, order: usize) -> Series {
    assert!(shift >= 1, "poch_neg needs shift >= 1");
    let one = Int::one();
    let mut s = Series::one(order);
    let mut j = shift as usize;
    while j <= order {
        s.mul_binomial(j, &one);
        j += 1;
    }
    s
}

/// `1/(q;q)_∞`, whose coefficient of `q^k` is the partition number p(k).
/// Computed by series inversion of the explicit product, independently of
/// the pentagonal recurrence.
pub fn inverse_euler(order: usize) -> Series {
    euler(order).invert_unit()
}

/// The bivariate product `(−x;q)_∞ (−x^{−1}q;q)_∞ =
/// Π_{j≥0}(1 + x q^j) · Π_{j≥1}(1 + x^{−1} q^j)` truncated at the order;
/// the exact `q^0` factor `1 + x` is included.
pub fn rank_poch_product(order: usize) -> XqSeries {
    let one = Int::one();
    let mut s = XqSeries::one(order);
    s.mul_binomial(0, 1, &one);
    for j in 1..=order {
        s.mul_binomial(j, 1, &one);
        s.mul_binomial(j, -1, &one);
    }
    s
}
