//! Strongly concave compositions and their brute-force enumeration.
//!
//! A strongly concave composition is a nonnegative integer sequence that
//! strictly decreases to a central part and then strictly increases; it
//! decomposes uniquely as (left parts, center, right parts) where each
//! side is a set of distinct parts all exceeding the center. The
//! single-part composition (center alone) is counted: the generating
//! function's constant and linear coefficients force it.

use num_bigint::BigInt;

use crate::{Error, Result};

/// Largest weight [`enumerate_scc`] accepts; weight-40 enumeration stays
/// in the hundreds of thousands of compositions.
pub const SCC_BOUND: u64 = 40;

/// Largest weight [`concave_count_oracle`] accepts (the weak-inequality
/// count grows much faster).
pub const CONCAVE_ORACLE_BOUND: u64 = 30;

/// A strongly concave composition in (left, center, right) form.
///
/// Reading the full sequence left to right gives
/// `left[0] > left[1] > … > center < … < right[last]`, with every side
/// part strictly greater than the center.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SCComposition {
    left: Vec<u64>,
    center: u64,
    right: Vec<u64>,
}

impl SCComposition {
    /// Validate the strictness invariants and build the composition.
    pub fn new(left: Vec<u64>, center: u64, right: Vec<u64>) -> Result<Self> {
        let strictly_decreasing = left.windows(2).all(|w| w[0] > w[1]);
        let strictly_increasing = right.windows(2).all(|w| w[0] < w[1]);
        let sides_exceed_center = left.iter().chain(&right).all(|&p| p > center);
        if !(strictly_decreasing && strictly_increasing && sides_exceed_center) {
            return Err(Error::Domain(format!(
                "not a strongly concave composition: {left:?} | {center} | {right:?}"
            )));
        }
        Ok(Self {
            left,
            center,
            right,
        })
    }

    pub fn left(&self) -> &[u64] {
        &self.left
    }

    pub fn center(&self) -> u64 {
        self.center
    }

    pub fn right(&self) -> &[u64] {
        &self.right
    }

    /// Sum of all parts.
    pub fn weight(&self) -> u64 {
        self.left.iter().sum::<u64>() + self.center + self.right.iter().sum::<u64>()
    }

    /// Parts after the center minus parts before it (equivalently
    /// `s − 2k + 1` for a length-s sequence with the center at position k).
    pub fn rank(&self) -> i64 {
        self.right.len() as i64 - self.left.len() as i64
    }

    /// The full sequence, center included.
    pub fn parts(&self) -> Vec<u64> {
        let mut out = self.left.clone();
        out.push(self.center);
        out.extend_from_slice(&self.right);
        out
    }
}

/// Partitions of `total` into distinct parts, all `>= min_part`, each
/// returned in increasing order.
fn distinct_partitions(total: u64, min_part: u64) -> Vec<Vec<u64>> {
    fn go(total: u64, min_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = min_part;
        // remaining parts are distinct and >= part, so part alone must fit
        while part <= total {
            prefix.push(part);
            go(total - part, part + 1, prefix, out);
            prefix.pop();
            part += 1;
        }
    }
    let mut out = Vec::new();
    go(total, min_part, &mut Vec::new(), &mut out);
    out
}

/// Every strongly concave composition of `n`, exactly once.
///
/// Iterates the center value and pairs partitions of the remainder into
/// distinct parts exceeding the center, one for each side.
pub fn enumerate_scc(n: u64) -> Result<Vec<SCComposition>> {
    if n > SCC_BOUND {
        return Err(Error::BoundExceeded {
            what: "strongly concave enumeration",
            bound: SCC_BOUND,
            got: n,
        });
    }
    let mut out = Vec::new();
    for center in 0..=n {
        let remainder = n - center;
        let side_sets: Vec<Vec<Vec<u64>>> = (0..=remainder)
            .map(|a| distinct_partitions(a, center + 1))
            .collect();
        for a in 0..=remainder {
            let b = remainder - a;
            for left_incr in &side_sets[a as usize] {
                for right in &side_sets[b as usize] {
                    let left: Vec<u64> = left_incr.iter().rev().copied().collect();
                    out.push(SCComposition {
                        left,
                        center,
                        right: right.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Number of (weakly) concave compositions of `n`: sides are ordinary
/// partitions with all parts exceeding the center, counted by explicit
/// recursive generation. Oracle for the `v(q)` series route.
pub fn concave_count_oracle(n: u64) -> Result<BigInt> {
    if n > CONCAVE_ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "concave enumeration",
            bound: CONCAVE_ORACLE_BOUND,
            got: n,
        });
    }
    fn count_partitions(total: u64, min_part: u64) -> u64 {
        if total == 0 {
            return 1;
        }
        let mut acc = 0;
        for part in min_part..=total {
            acc += count_partitions(total - part, part);
        }
        acc
    }
    let mut total = BigInt::from(0u32);
    for center in 0..=n {
        let remainder = n - center;
        let side_counts: Vec<u64> = (0..=remainder)
            .map(|a| count_partitions(a, center + 1))
            .collect();
        for a in 0..=remainder {
            let pairs = side_counts[a as usize] * side_counts[(remainder - a) as usize];
            total += pairs;
        }
    }
    Ok(total)
}
