//! Brute-force Hochschild homology of finite-dimensional algebras.

pub mod algebra;
pub mod checks;
pub mod complex;

pub use algebra::{Bimodule, FiniteDimAlgebra, Group, GroupAction, LinearMap, Vector};
pub use checks::{
    afls_check, homotopy_identity_check, verify_homolog_i, ClassComplex, CyclicChains,
    HomotopyReport, LevelComparison,
};
pub use complex::{hh_dims, size_cap, HochschildComplex};
