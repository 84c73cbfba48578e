//! Exact truncated power-series arithmetic in `q`, bivariate rank series
//! in `(x, q)`, the q-Pochhammer products, and the Jacobi triple product
//! check. All coefficients are exact integers; nothing in this module
//! touches floating point.

pub mod jacobi;
pub mod products;
pub mod rank;
pub mod truncated;

pub use jacobi::{jacobi_triple_check, JacobiCheck};
pub use products::{euler, inverse_euler, poch_neg, rank_poch_product};
pub use rank::{x_support_bound, RankSeries};
pub use truncated::TruncatedSeries;
