//! Exact computations around Hochschild (co)homology of wreath-product
//! algebras `ℚ[S_n] ⋉ A^{⊗n}`.
//!
//! The crate has three layers:
//!
//! * dimension bookkeeping: [`series`], [`betti`], [`partitions`] and the
//!   partition-sum / infinite-product formulas in [`wreath`];
//! * brute-force oracles: bar complexes of finite-dimensional algebras
//!   ([`hochschild`]) and windowed Koszul complexes of the rank-one Weyl-type
//!   algebras ([`koszul`]);
//! * a PBW normal-ordering engine for the rational Cherednik algebra of type
//!   `A_{n-1}` ([`cherednik`]).
//!
//! All arithmetic is exact (big integers, rationals, rational functions).

pub mod betti;
pub mod cherednik;
pub mod cli;
pub mod error;
pub mod hochschild;
pub mod koszul;
pub mod linalg;
pub mod partitions;
pub mod poly;
pub mod presets;
pub mod series;
pub mod verify;
pub mod wreath;

pub use betti::{AlgebraPreset, BettiTable};
pub use error::{Error, Result};
pub use series::BiSeries;
