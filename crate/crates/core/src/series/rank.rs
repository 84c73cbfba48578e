//! Bivariate series in `(x, q)`: dense in the q-power, sparse signed
//! integer exponents in `x`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_integer::Roots;

use crate::scalar::Coeff;
use crate::{Error, Result};
use super::TruncatedSeries;

/// Coarse bound on the x-exponent support at q-power `n`:
/// `⌈√(2n)⌉ + ⌈√(24n+1)⌉ + 2`. Every series this crate constructs stays
/// inside `[-bound, bound]`; the setters assert it rather than assume
/// anything tighter.
pub fn x_support_bound(n: usize) -> i64 {
    let n = n as u64;
    (sqrt_ceil(2 * n) + sqrt_ceil(24 * n + 1) + 2) as i64
}

fn sqrt_ceil(v: u64) -> u64 {
    let r = v.sqrt();
    if r * r == v {
        r
    } else {
        r + 1
    }
}

/// A q-power series whose coefficients are finite maps from x-exponent to
/// an exact integer, truncated at a fixed q-order. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSeries<C: Coeff> {
    cols: Vec<BTreeMap<i64, C>>,
}

impl<C: Coeff> RankSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self {
            cols: vec![BTreeMap::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.add_term(0, 0, C::one());
        s
    }

    /// Embed a univariate series as the x^0 slice.
    pub fn from_univariate(u: &TruncatedSeries<C>) -> Self {
        let mut s = Self::zero(u.order());
        for (n, c) in u.coeffs().iter().enumerate() {
            if !c.is_zero() {
                s.add_term(n, 0, c.clone());
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.cols.len() - 1
    }

    /// The x-map at q-power `n`.
    pub fn col(&self, n: usize) -> &BTreeMap<i64, C> {
        &self.cols[n]
    }

    pub fn coeff(&self, n: usize, m: i64) -> Option<&C> {
        self.cols[n].get(&m)
    }

    /// Add `c · x^m q^n`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, n: usize, m: i64, c: C) {
        if c.is_zero() {
            return;
        }
        assert!(
            m.abs() <= x_support_bound(n),
            "x-exponent {m} breaches the support bound at q^{n}"
        );
        let col = &mut self.cols[n];
        match col.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    col.remove(&m);
                }
            }
            None => {
                col.insert(m, c);
            }
        }
    }

    fn check_orders(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_orders(rhs)?;
        let mut out = self.clone();
        for (n, col) in rhs.cols.iter().enumerate() {
            for (&m, c) in col {
                out.add_term(n, m, c.clone());
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_orders(rhs)?;
        let mut out = self.clone();
        for (n, col) in rhs.cols.iter().enumerate() {
            for (&m, c) in col {
                out.add_term(n, m, -c.clone());
            }
        }
        Ok(out)
    }

    /// Cauchy product in q, additive in the x-exponent.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_orders(rhs)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (na, cola) in self.cols.iter().enumerate() {
            if cola.is_empty() {
                continue;
            }
            for (nb, colb) in rhs.cols.iter().take(order - na + 1).enumerate() {
                for (&ma, ca) in cola {
                    for (&mb, cb) in colb {
                        out.add_term(na + nb, ma + mb, ca.clone() * cb);
                    }
                }
            }
        }
        Ok(out)
    }

    /// In-place multiplication by `1 + c·x^{xm} q^{qk}`.
    pub fn mul_binomial(&mut self, qk: usize, xm: i64, c: &C) {
        if qk > self.order() {
            return;
        }
        if qk == 0 {
            // column-local: add the x-shifted copy of each column to itself
            for n in 0..=self.order() {
                let snapshot: Vec<(i64, C)> =
                    self.cols[n].iter().map(|(&m, v)| (m, v.clone())).collect();
                for (m, v) in snapshot {
                    self.add_term(n, m + xm, v * c);
                }
            }
            return;
        }
        for n in (qk..=self.order()).rev() {
            let snapshot: Vec<(i64, C)> = self.cols[n - qk]
                .iter()
                .map(|(&m, v)| (m, v.clone()))
                .collect();
            for (m, v) in snapshot {
                self.add_term(n, m + xm, v * c);
            }
        }
    }

    /// Evaluate at `x = 1`: sum each column's x-map.
    pub fn specialize_x1(&self) -> TruncatedSeries<C> {
        let mut out = TruncatedSeries::zero(self.order());
        for (n, col) in self.cols.iter().enumerate() {
            let mut acc = C::zero();
            for c in col.values() {
                acc += c;
            }
            out.set_coeff(n, acc);
        }
        out
    }

    /// First `(n, m)` where the two series disagree, scanning q-powers
    /// upward and x-exponents in increasing order; `None` when equal.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, i64)> {
        let order = self.order().min(other.order());
        for n in 0..=order {
            let (a, b) = (&self.cols[n], &other.cols[n]);
            if a == b {
                continue;
            }
            let mut keys: Vec<i64> = a.keys().chain(b.keys()).copied().collect();
            keys.sort_unstable();
            keys.dedup();
            for m in keys {
                if a.get(&m) != b.get(&m) {
                    return Some((n, m));
                }
            }
        }
        None
    }

    /// JSON form: one record per nonempty q-power, terms sorted by
    /// x-exponent, coefficients as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<serde_json::Value> = self
            .cols
            .iter()
            .enumerate()
            .filter(|(_, col)| !col.is_empty())
            .map(|(n, col)| {
                let terms: Vec<serde_json::Value> = col
                    .iter()
                    .map(|(m, c)| serde_json::json!({ "m": m, "c": c.to_string() }))
                    .collect();
                serde_json::json!({ "n": n, "terms": terms })
            })
            .collect();
        serde_json::Value::Array(records)
    }
}

impl<C: Coeff> Add for &RankSeries<C> {
    type Output = RankSeries<C>;
    fn add(self, rhs: Self) -> RankSeries<C> {
        self.try_add(rhs).expect("series order mismatch")
    }
}

impl<C: Coeff> Sub for &RankSeries<C> {
    type Output = RankSeries<C>;
    fn sub(self, rhs: Self) -> RankSeries<C> {
        self.try_sub(rhs).expect("series order mismatch")
    }
}

impl<C: Coeff> Mul for &RankSeries<C> {
    type Output = RankSeries<C>;
    fn mul(self, rhs: Self) -> RankSeries<C> {
        self.try_mul(rhs).expect("series order mismatch")
    }
}
