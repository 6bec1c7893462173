//! Lattices in almost abelian Lie groups `ℝ ⋉_φ ℝ^d`, `φ(t) = e^{tM}`.
//!
//! Floating point lives here and only here. Integer data (discriminants,
//! recurrences, characteristic polynomials, companion matrices) is exact;
//! spectra, exponentials and residuals are `f64`.

mod certificate;
mod cubic;
mod nolattice;
mod raices;
mod recurrence;
mod spectrum;

pub use certificate::{bock_certificate, bottleneck_distance, Conjugator, LatticeCertificate, TOLERANCE};
pub use cubic::{
    b_values, cubic_roots, discriminant, in_sigma, in_sigma_prime, pisot_check, self_consistency_residual,
    sigma_region, BValue, CubicRootData, PisotClass, SigmaPoint,
};
pub use nolattice::{fi_family, integrality_residual, nolattice_scan, NoLatticeScan};
pub use raices::{raices_oracle, RaicesReport, RaicesViolation};
pub use recurrence::{
    a_sequence, char_poly_integer, companion_matrix, integer_char_poly, integer_determinant, t_parameter,
    RecurrenceData,
};
pub use spectrum::{poly_from_roots, spectrum, Complex64};
