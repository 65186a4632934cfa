//! Rank-one generalized Weyl algebras and their Hochschild cohomology via the
//! two-step Koszul resolution.

pub mod complex;
pub mod element;

pub use complex::{
    build_cochain_complex, crossed_z2_cohomology, duality_check, hh_cohomology_rank_one,
    CochainComplex, Twist,
};
pub use element::{Bimonomial, Kind, RankOneElement};
