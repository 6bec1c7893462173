//! Exact exterior calculus on Lie algebras given by structure constants.

mod algebra;
mod betti;
mod differential;
mod form;
pub mod linalg;

pub use algebra::{LieAlgebra, ValidationReport};
pub use betti::{adapted_betti_direct, betti_direct, BettiVector};
pub use differential::{ce_differential, d_theta, differential_matrix, exterior_basis};
pub use form::{wedge, KForm, MultiIndex};
