//! Exact rank-count tables `V_d(m, n)` for `0 <= n <= nmax`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

/// Table of counts indexed by (rank m, weight n). Only `m >= 0` is
/// stored; the `m ↔ −m` symmetry is exact and lookups mirror the sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    cols: Vec<BTreeMap<u64, BigInt>>,
}

impl RankTable {
    /// Build from per-weight maps over nonnegative ranks. Zero counts are
    /// dropped.
    pub(crate) fn from_nonnegative_columns(cols: Vec<BTreeMap<u64, BigInt>>) -> Self {
        let mut cols = cols;
        for col in &mut cols {
            col.retain(|_, c| !c.is_zero());
        }
        Self { cols }
    }

    pub fn nmax(&self) -> u64 {
        self.cols.len() as u64 - 1
    }

    /// `V_d(m, n)`; zero for anything not stored.
    pub fn get(&self, m: i64, n: u64) -> BigInt {
        self.cols
            .get(n as usize)
            .and_then(|col| col.get(&m.unsigned_abs()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// `V_d(n) = Σ_m V_d(m, n)`.
    pub fn column_sum(&self, n: u64) -> BigInt {
        let col = &self.cols[n as usize];
        let mut acc = col.get(&0).cloned().unwrap_or_else(BigInt::zero);
        for (m, c) in col {
            if *m > 0 {
                acc += 2 * c;
            }
        }
        acc
    }

    /// Largest rank with a nonzero count at weight `n`.
    pub fn max_rank(&self, n: u64) -> u64 {
        self.cols[n as usize]
            .keys()
            .next_back()
            .copied()
            .unwrap_or(0)
    }

    /// All nonzero entries as `(n, m, count)` rows, both signs of m,
    /// sorted by `(n, m)`.
    pub fn rows(&self) -> Vec<(u64, i64, BigInt)> {
        let mut out = Vec::new();
        for (n, col) in self.cols.iter().enumerate() {
            for (&m, c) in col.iter().rev() {
                if m > 0 {
                    out.push((n as u64, -(m as i64), c.clone()));
                }
            }
            for (&m, c) in col {
                out.push((n as u64, m as i64, c.clone()));
            }
        }
        out
    }

    /// CSV with header `n,m,count`, one row per nonzero entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,count\n");
        for (n, m, c) in self.rows() {
            writeln!(out, "{n},{m},{c}").expect("string write");
        }
        out
    }

    /// JSON array of `{n, m, count}` records in the same order as the
    /// CSV, counts as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows()
                .into_iter()
                .map(|(n, m, c)| {
                    serde_json::json!({ "n": n, "m": m, "count": c.to_string() })
                })
                .collect(),
        )
    }
}
