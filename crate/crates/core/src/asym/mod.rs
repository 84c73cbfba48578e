//! Floating-point evaluation of the asymptotic formulas and the empirical
//! rank distribution against its Gaussian limit.

pub mod dist;
pub mod formulas;
pub mod logscaled;
pub mod normal;

pub use dist::{empirical_rank_cdf, CurvePoint, DistributionCurve, EXACT_BUDGET};
pub use formulas::{gaussian_ratio, lemma4_f, profile_f, theorem1_estimate, vd_leading};
pub use logscaled::LogScaled;
pub use normal::normal_cdf;
