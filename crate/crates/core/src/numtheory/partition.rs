//! The exact partition function `p(n)`.
//!
//! [`PartitionCache`] computes p(n) by the pentagonal-number recurrence
//! into a growable table of big integers; [`partition_enumerate`] is the
//! independent brute-force oracle that generates every partition
//! explicitly, kept to small n by an enforced bound.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Largest n accepted by [`partition_enumerate`]; p(60) < 10^6 partitions
/// generate in well under a second, beyond that the recurrence is the
/// reference.
pub const ENUMERATION_BOUND: u64 = 60;

/// Largest index the cache will fill. The recurrence is O(n^{3/2})
/// big-integer additions and the table grows like n^{3/2} bytes; past
/// this the request is reported instead of grinding or exhausting memory.
pub const MAX_PARTITION_INDEX: u64 = 100_000;

/// Growable table of exact partition numbers, `values[n] = p(n)`.
///
/// Concurrency contract: extension borrows the cache mutably, so shared
/// use is single-writer; once populated, any number of threads may read
/// concurrently through a shared reference.
#[derive(Debug, Clone, Default)]
pub struct PartitionCache {
    values: Vec<BigInt>,
}

impl PartitionCache {
    pub fn new() -> Self {
        Self {
            values: vec![BigInt::one()],
        }
    }

    /// Highest index currently filled.
    pub fn capacity(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// Extend the table so that every `p(k)`, `k <= n`, is available.
    pub fn ensure(&mut self, n: u64) -> Result<()> {
        if n > MAX_PARTITION_INDEX {
            return Err(Error::BoundExceeded {
                what: "partition function index",
                bound: MAX_PARTITION_INDEX,
                got: n,
            });
        }
        while self.values.len() <= n as usize {
            let k = self.values.len() as i64;
            let mut acc = BigInt::zero();
            let mut j = 1i64;
            loop {
                // generalized pentagonal numbers j(3j-1)/2 and j(3j+1)/2
                let g1 = j * (3 * j - 1) / 2;
                if g1 > k {
                    break;
                }
                let g2 = j * (3 * j + 1) / 2;
                if j % 2 == 1 {
                    acc += &self.values[(k - g1) as usize];
                    if g2 <= k {
                        acc += &self.values[(k - g2) as usize];
                    }
                } else {
                    acc -= &self.values[(k - g1) as usize];
                    if g2 <= k {
                        acc -= &self.values[(k - g2) as usize];
                    }
                }
                j += 1;
            }
            self.values.push(acc);
        }
        Ok(())
    }

    /// `p(n)`, with `p(n) = 0` for negative `n`. Extends the cache as
    /// needed.
    pub fn partition_count(&mut self, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        self.ensure(n as u64)?;
        Ok(self.values[n as usize].clone())
    }

    /// Read-only lookup for an already-populated index; `None` when the
    /// cache has not been extended that far. Negative indices yield the
    /// zero convention.
    pub fn cached(&self, n: i64) -> Option<BigInt> {
        if n < 0 {
            return Some(BigInt::zero());
        }
        self.values.get(n as usize).cloned()
    }
}

/// Number of partitions of `n` by explicit generation of every
/// non-increasing positive sequence summing to `n`.
pub fn partition_enumerate(n: u64) -> Result<u64> {
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "partition enumeration",
            bound: ENUMERATION_BOUND,
            got: n,
        });
    }
    fn visit(remaining: u64, max_part: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut count = 0;
        for part in 1..=max_part.min(remaining) {
            count += visit(remaining - part, part);
        }
        count
    }
    Ok(visit(n, n))
}
