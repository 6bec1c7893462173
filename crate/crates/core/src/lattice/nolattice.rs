use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;

use super::spectrum::{poly_from_roots, spectrum};
use crate::models::{lck_family, AlmostAbelianSpec};
use crate::scalar::{self, ExactScalar};
use crate::{Error, Result};

/// `ad_{f₁} = diag(μ, −μ/(2n) I + B)` with `B` the block-diagonal
/// rotation generator `uᵢ ↦ ηᵢvᵢ`, `vᵢ ↦ −ηᵢuᵢ`: the unimodular member of
/// the LCK family.
pub fn fi_family(mu: &ExactScalar, angles: &[ExactScalar]) -> Result<AlmostAbelianSpec> {
    let n = angles.len();
    if n == 0 {
        return Err(Error::Precondition("at least one angle is required".into()));
    }
    let size = 2 * n;
    let mut b = vec![vec![ExactScalar::zero(); size]; size];
    for (i, eta) in angles.iter().enumerate() {
        b[n + i][i] = eta.clone();
        b[i][n + i] = -eta.clone();
    }
    let lambda = -mu / scalar::int(2 * n as i64);
    lck_family(n, mu, &lambda, &b)?;
    let a: Vec<Vec<ExactScalar>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { &lambda + &b[i][j] } else { b[i][j].clone() })
                .collect()
        })
        .collect();
    let label = format!(
        "fi(mu={}, eta=[{}])",
        scalar::format(mu),
        angles.iter().map(scalar::format).collect::<Vec<_>>().join(",")
    );
    Ok(AlmostAbelianSpec::block(mu.clone(), &vec![ExactScalar::zero(); size], &a)?.with_label(label))
}

/// Largest distance to `ℤ` among the coefficients of the characteristic
/// polynomial of `e^{tM}` other than the leading and constant ones, where
/// `M` has eigenvalues `eig`.
pub fn integrality_residual(eig: &[Complex64], t: f64) -> f64 {
    let roots: Vec<Complex64> = eig.iter().map(|l| (l * t).exp()).collect();
    let c = poly_from_roots(&roots);
    let k = c.len();
    c[1..k.saturating_sub(1)]
        .iter()
        .map(|z| (z.re - z.re.round()).abs().max(z.im.abs()))
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NoLatticeScan {
    pub label: String,
    pub step: f64,
    pub t_max: f64,
    pub samples: usize,
    pub min_residual: f64,
    pub t_at_min: f64,
    /// Minimum over the part of the grid with `t ≥ 0.1`.
    pub min_residual_away_from_zero: f64,
}

/// Scan `t = step, 2·step, …, t_max` for near-integral characteristic
/// polynomials of `e^{tM}`.
pub fn nolattice_scan(spec: &AlmostAbelianSpec, step: f64, t_max: f64) -> Result<NoLatticeScan> {
    if !(step > 0.0) || !(t_max >= step) {
        return Err(Error::Precondition("need 0 < step ≤ t_max".into()));
    }
    let eig = spectrum(&spec.m);
    let samples = (t_max / step).round() as usize;
    let values: Vec<(f64, f64)> = (1..=samples)
        .into_par_iter()
        .map(|k| {
            let t = k as f64 * step;
            (t, integrality_residual(&eig, t))
        })
        .collect();
    let (t_at_min, min_residual) = values
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap_or((f64::NAN, f64::NAN));
    let min_residual_away_from_zero = values
        .iter()
        .filter(|(t, _)| *t >= 0.1 - 1e-12)
        .map(|v| v.1)
        .fold(f64::INFINITY, f64::min);
    Ok(NoLatticeScan {
        label: spec.label.clone().unwrap_or_default(),
        step,
        t_max,
        samples,
        min_residual,
        t_at_min,
        min_residual_away_from_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn family_is_unimodular() {
        let s = fi_family(&int(1), &[int(1), int(2)]).unwrap();
        assert!(s.trace().is_zero());
        assert_eq!(s.d(), 5);
    }

    #[test]
    fn residual_at_zero_is_binomial() {
        let eig = vec![Complex64::new(1.0, 0.0); 3];
        assert!(integrality_residual(&eig, 0.0) < 1e-15);
    }

    #[test]
    fn m6_hits_integers() {
        let spec = crate::models::m6_matrix(2);
        let eig = spectrum(&spec.m);
        let t = crate::lattice::t_parameter(2, 3).unwrap();
        assert!(integrality_residual(&eig, t) < 1e-9);
    }

    #[test]
    fn scan_shape() {
        let s = fi_family(&int(1), &[int(1), int(2)]).unwrap();
        let r = nolattice_scan(&s, 1e-2, 1.0).unwrap();
        assert_eq!(r.samples, 100);
        assert!(r.min_residual <= r.min_residual_away_from_zero);
    }
}
