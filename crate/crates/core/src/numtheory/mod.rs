//! Kronecker symbols, the two Dirichlet characters driving the counting
//! formulas, the exact partition function `p(n)`, and Hardy–Ramanujan
//! approximations of it.

pub mod hardy;
pub mod kronecker;
mod mp;
pub mod partition;

pub use hardy::{
    hardy_b, hardy_ramanujan_phat, hardy_ramanujan_phat_log, lemma1_residual_scaled,
    partition_ratio_approx,
};
pub use kronecker::{chi_minus12, chi_minus3_at_odd, kronecker};
pub use partition::{partition_enumerate, PartitionCache, ENUMERATION_BOUND, MAX_PARTITION_INDEX};
