//! Dense univariate power series known modulo `q^{order+1}`.

use std::ops::{Add, Mul, Sub};

use crate::scalar::Coeff;
use crate::{Error, Result};

/// A power series truncated at a fixed order: `coeffs[k]` is the exact
/// coefficient of `q^k`, `0 <= k <= order`. Arithmetic never reads or
/// writes beyond the stated order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// `c · q^k`.
    pub fn monomial(order: usize, k: usize, c: C) -> Self {
        assert!(k <= order, "monomial degree beyond order");
        let mut s = Self::zero(order);
        s.coeffs[k] = c;
        s
    }

    /// Wrap explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: C) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
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
        for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o += r;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_orders(rhs)?;
        let mut out = self.clone();
        for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o -= r;
        }
        Ok(out)
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_orders(rhs)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i + 1).enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a.clone() * b;
                out.coeffs[i + j] += &prod;
            }
        }
        Ok(out)
    }

    /// In-place multiplication by the binomial `1 + c·q^k`, `k >= 1`.
    pub fn mul_binomial(&mut self, k: usize, c: &C) {
        assert!(k >= 1, "use scalar operations for a q^0 factor");
        if k > self.order() {
            return;
        }
        for n in (k..=self.order()).rev() {
            if self.coeffs[n - k].is_zero() {
                continue;
            }
            let add = self.coeffs[n - k].clone() * c;
            self.coeffs[n] += &add;
        }
    }

    /// `q^k · self`, truncated back to the same order.
    pub fn shifted(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for n in k..=order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Scalar multiple.
    pub fn scalar_mul(&self, c: &C) -> Self {
        let mut out = self.clone();
        for v in &mut out.coeffs {
            *v = v.clone() * c;
        }
        out
    }

    /// Multiplicative inverse, requiring constant term exactly 1 so the
    /// result stays in the coefficient ring.
    pub fn invert_unit(&self) -> Self {
        assert!(
            self.coeffs[0].is_one(),
            "inversion requires constant term 1"
        );
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = C::one();
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || inv.coeffs[n - k].is_zero() {
                    continue;
                }
                let prod = self.coeffs[k].clone() * &inv.coeffs[n - k];
                acc += &prod;
            }
            inv.coeffs[n] = -acc;
        }
        inv
    }

    /// Restriction to a smaller order.
    pub fn truncated(&self, new_order: usize) -> Self {
        assert!(new_order <= self.order(), "can only truncate downwards");
        Self {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    /// JSON array-of-coefficients form, each coefficient as a decimal
    /// string so arbitrary-precision values round-trip through text.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl<C: Coeff> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        self.try_add(rhs).expect("series order mismatch")
    }
}

impl<C: Coeff> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        self.try_sub(rhs).expect("series order mismatch")
    }
}

impl<C: Coeff> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        self.try_mul(rhs).expect("series order mismatch")
    }
}
