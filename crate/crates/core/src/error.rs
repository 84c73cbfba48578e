//! Error type shared across the crate.

/// Errors reported by the exact and floating evaluators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Binary series operation on operands of different truncation order.
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// An input exceeded an enforced scale bound.
    #[error("{what} = {got} exceeds the supported bound {bound}")]
    BoundExceeded {
        what: &'static str,
        bound: u64,
        got: u64,
    },

    /// Argument outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// `(m, n)` outside the region where the closed partition formula for
    /// `V_d(m, n)` is valid.
    #[error("(m={m}, n={n}) lies outside the region 0 <= n < |m|(|m|+5)/2 + 4")]
    OutsideRegion { m: i64, n: i64 },
}
