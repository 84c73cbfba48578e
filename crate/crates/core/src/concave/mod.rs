//! The composition model, the brute-force enumeration oracle, and the
//! independent exact computations of `V_d(n)` and `V_d(m, n)`.

pub mod composition;
pub mod counts;
pub mod table;

pub use composition::{
    concave_count_oracle, enumerate_scc, SCComposition, CONCAVE_ORACLE_BOUND, SCC_BOUND,
};
pub use counts::{
    rank_table_oracle, rank_table_prop1, v_concave, vd_andrews, vd_fast, vd_product, vdm_exact,
    vdm_genfunc, vdm_prop1, vdm_region, vdm_telescoped,
};
pub use table::RankTable;
