//! Exact counting and asymptotic verification for the rank statistic of
//! strongly concave compositions.
//!
//! A strongly concave composition of `n` is a sequence of nonnegative
//! integers that strictly decreases to a central part and then strictly
//! increases; its rank is the number of parts after the center minus the
//! number before it. This crate computes the counts `V_d(n)` and the rank
//! refinements `V_d(m, n)` exactly, by several independent routes, and
//! evaluates the floating-point asymptotics they converge to:
//!
//! - [`numtheory`]: Kronecker symbols, the two small Dirichlet characters
//!   the counting formulas use, the exact partition function `p(n)`, and
//!   Hardy–Ramanujan approximations of it.
//! - [`series`]: exact truncated power series in `q`, bivariate rank
//!   series in `(x, q)`, q-Pochhammer products, and a Jacobi triple
//!   product check.
//! - [`concave`]: the composition model, a brute-force enumeration
//!   oracle, and the exact counting routes for `V_d(n)` and `V_d(m, n)`.
//! - [`asym`]: log-scaled evaluation of the asymptotic formulas and the
//!   empirical rank distribution against the Gaussian limit.
//!
//! Series and log-scaled arithmetic are generic over the scalar type; the
//! aliases below fix the concrete types the rest of the crate works with
//! (arbitrary-precision integers for anything counted, `f64` for
//! anything approximated).

pub mod asym;
pub mod concave;
pub mod error;
pub mod numtheory;
pub mod scalar;
pub mod series;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Exact integer scalar used for every count.
pub type Int = num_bigint::BigInt;

/// Univariate exact q-series with [`Int`] coefficients.
pub type Series = series::TruncatedSeries<Int>;

/// Bivariate rank series in `(x, q)` with [`Int`] coefficients.
pub type XqSeries = series::RankSeries<Int>;

/// Log-scaled nonnegative real in double precision.
pub type Log64 = asym::LogScaled<f64>;
