use nalgebra::DMatrix;
pub use num_complex::Complex64;
use num_traits::Zero;

use crate::scalar::{to_f64, ExactScalar};

fn is_triangular(m: &[Vec<ExactScalar>]) -> bool {
    let n = m.len();
    let upper = (0..n).all(|i| (0..i).all(|j| m[i][j].is_zero()));
    let lower = (0..n).all(|i| (i + 1..n).all(|j| m[i][j].is_zero()));
    upper || lower
}

/// Eigenvalues of a rational matrix: read off the diagonal when the matrix
/// is triangular, otherwise from a dense real Schur decomposition.
pub fn spectrum(m: &[Vec<ExactScalar>]) -> Vec<Complex64> {
    let n = m.len();
    if is_triangular(m) {
        return (0..n).map(|i| Complex64::new(to_f64(&m[i][i]), 0.0)).collect();
    }
    let dense = DMatrix::from_fn(n, n, |i, j| to_f64(&m[i][j]));
    dense.complex_eigenvalues().iter().copied().collect()
}

/// Monic polynomial with the given roots, highest degree first.
pub fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::zero(); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i] += a;
            next[i + 1] -= a * r;
        }
        c = next;
    }
    c
}
