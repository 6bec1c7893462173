//! Exact computations on almost abelian Lie algebras.
//!
//! The crate is organised by subsystem:
//!
//! * [`exterior`]: rational linear algebra, alternating forms, the
//!   Chevalley–Eilenberg differential and its twisted variant, Betti numbers.
//! * [`models`]: constructors for almost abelian algebras and the named
//!   families (LCK, LCS, the diagonal unimodular family, 4-dimensional list).
//! * [`lcs`]: verification and classification of locally conformal
//!   symplectic / Kähler structures.
//! * [`lattice`]: floating point machinery for lattices (cubic roots,
//!   integer recurrences, companion matrices, spectral certificates).
//! * [`combinatorics`]: subset-sum counts and closed Betti number formulas.
//!
//! Exact quantities are [`ExactScalar`] (arbitrary precision rationals);
//! floats only appear in [`lattice`].

pub mod combinatorics;
pub mod error;
pub mod exterior;
pub mod lattice;
pub mod lcs;
pub mod models;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use exterior::{BettiVector, KForm, LieAlgebra, MultiIndex};
pub use lcs::{Kind, LcsStructure};
pub use models::{AlmostAbelianSpec, HermitianData};
pub use scalar::ExactScalar;
