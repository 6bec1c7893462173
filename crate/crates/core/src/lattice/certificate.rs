use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::recurrence::integer_char_poly;
use super::spectrum::{poly_from_roots, spectrum};
use crate::models::AlmostAbelianSpec;
use crate::{Error, Result};

pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct Conjugator {
    /// Real `P` with `P·e^{t₀M} ≈ target·P`.
    pub matrix: Vec<Vec<f64>>,
    /// `‖P·e^{t₀M} − target·P‖_F / (‖P‖_F · max(‖e^{t₀M}‖_F, ‖target‖_F))`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeCertificate {
    pub t0: f64,
    /// Characteristic polynomial of the target, highest degree first.
    pub char_poly: Vec<BigInt>,
    pub companion: Vec<Vec<BigInt>>,
    /// Spectrum of `e^{t₀M}`.
    pub spectrum: Vec<Complex64>,
    /// Spectrum of the target, polished against its exact polynomial.
    pub target_spectrum: Vec<Complex64>,
    /// `max_j |num_j − exact_j| / max(1, |exact_j|)` over polynomial
    /// coefficients.
    pub coefficient_residual: f64,
    /// Bottleneck distance between the two spectra.
    pub spectrum_residual: f64,
    pub min_separation: f64,
    pub distinct_spectrum: bool,
    pub certified: bool,
    pub conjugator: Option<Conjugator>,
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Newton refinement of approximate roots of a real polynomial given
/// highest degree first.
pub(crate) fn polish_roots(coeffs: &[f64], roots: &mut [Complex64]) {
    for z in roots.iter_mut() {
        for _ in 0..50 {
            let (p, dp) = horner(coeffs, *z);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            let next = *z - step;
            // stop when Newton stops improving (multiple roots stall)
            if horner(coeffs, next).0.norm() >= p.norm() {
                break;
            }
            *z = next;
            if step.norm() <= 1e-16 * z.norm().max(1.0) {
                break;
            }
        }
    }
}

fn has_perfect_matching(adj: &[Vec<bool>]) -> bool {
    fn augment(u: usize, adj: &[Vec<bool>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for v in 0..adj.len() {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let n = adj.len();
    let mut owner = vec![None; n];
    (0..n).all(|u| augment(u, adj, &mut vec![false; n], &mut owner))
}

/// Smallest `r` such that some bijection moves every point of `a` to a
/// point of `b` within distance `r`.
pub fn bottleneck_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    if a.is_empty() {
        return 0.0;
    }
    let dist: Vec<Vec<f64>> = a.iter().map(|x| b.iter().map(|y| (x - y).norm()).collect()).collect();
    let mut levels: Vec<f64> = dist.iter().flatten().copied().collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let (mut lo, mut hi) = (0, levels.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let adj: Vec<Vec<bool>> = dist.iter().map(|r| r.iter().map(|&d| d <= levels[mid]).collect()).collect();
        if has_perfect_matching(&adj) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    levels[lo]
}

fn min_separation(s: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            best = best.min((s[i] - s[j]).norm());
        }
    }
    best
}

fn null_vector(a: &DMatrix<Complex64>, lambda: Complex64) -> DMatrix<Complex64> {
    let n = a.nrows();
    let shifted = a - DMatrix::<Complex64>::identity(n, n) * lambda;
    let svd = shifted.svd(false, true);
    let v_t = svd.v_t.expect("requested v_t");
    let k = (0..n)
        .min_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]))
        .unwrap_or(0);
    DMatrix::from_fn(n, 1, |i, _| v_t[(k, i)].conj())
}

fn eigenvector_matrix(a: &DMatrix<Complex64>, eig: &[Complex64]) -> DMatrix<Complex64> {
    let n = a.nrows();
    let mut v = DMatrix::<Complex64>::zeros(n, n);
    for (j, &l) in eig.iter().enumerate() {
        v.set_column(j, &null_vector(a, l).column(0));
    }
    v
}

fn conjugator(phi: &DMatrix<f64>, target: &DMatrix<f64>, s: &[Complex64], ts: &[Complex64]) -> Option<Conjugator> {
    // pair each eigenvalue of φ(t₀) with its nearest target eigenvalue
    let mut order = Vec::with_capacity(s.len());
    let mut used = vec![false; ts.len()];
    for x in s {
        let j = (0..ts.len())
            .filter(|&j| !used[j])
            .min_by(|&i, &j| (ts[i] - x).norm().total_cmp(&(ts[j] - x).norm()))?;
        used[j] = true;
        order.push(ts[j]);
    }
    let cphi = phi.map(|x| Complex64::new(x, 0.0));
    let ct = target.map(|x| Complex64::new(x, 0.0));
    let v = eigenvector_matrix(&cphi, s);
    let w = eigenvector_matrix(&ct, &order);
    let p = (w * v.try_inverse()?).map(|z| z.re);
    let lhs = &p * phi - target * &p;
    let scale = p.norm() * phi.norm().max(target.norm());
    if scale == 0.0 {
        return None;
    }
    Some(Conjugator {
        matrix: (0..p.nrows()).map(|i| p.row(i).iter().copied().collect()).collect(),
        residual: lhs.norm() / scale,
    })
}

/// Numeric evidence that `e^{t₀M}` is conjugate to `target`: both have the
/// same simple spectrum and the same (integer) characteristic polynomial.
pub fn bock_certificate(spec: &AlmostAbelianSpec, t0: f64, target: &[Vec<BigInt>]) -> Result<LatticeCertificate> {
    if t0 == 0.0 || !t0.is_finite() {
        return Err(Error::Precondition("t0 must be a nonzero finite number".into()));
    }
    let d = spec.d();
    if target.len() != d || target.iter().any(|r| r.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: target.len(),
        });
    }
    let s: Vec<Complex64> = spectrum(&spec.m).into_iter().map(|l| (l * t0).exp()).collect();
    let char_poly = integer_char_poly(target);
    let exact: Vec<f64> = char_poly.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
    let numeric = poly_from_roots(&s);
    let coefficient_residual = numeric
        .iter()
        .zip(&exact)
        .map(|(z, e)| Complex64::new(z.re - e, z.im).norm() / e.abs().max(1.0))
        .fold(0.0, f64::max);

    let tf = DMatrix::from_fn(d, d, |i, j| target[i][j].to_f64().unwrap_or(f64::INFINITY));
    let mut ts: Vec<Complex64> = tf.complex_eigenvalues().iter().copied().collect();
    polish_roots(&exact, &mut ts);
    let spectrum_residual = bottleneck_distance(&s, &ts);
    let sep = min_separation(&s);
    let scale = s.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let distinct_spectrum = sep > TOLERANCE * scale;
    let certified = coefficient_residual <= TOLERANCE && spectrum_residual <= TOLERANCE && distinct_spectrum;

    let conj = if distinct_spectrum {
        let phi = DMatrix::from_fn(d, d, |i, j| crate::scalar::to_f64(&spec.m[i][j]) * t0).exp();
        conjugator(&phi, &tf, &s, &ts)
    } else {
        None
    };
    Ok(LatticeCertificate {
        t0,
        char_poly,
        companion: target.to_vec(),
        spectrum: s,
        target_spectrum: ts,
        coefficient_residual,
        spectrum_residual,
        min_separation: sep,
        distinct_spectrum,
        certified,
        conjugator: conj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{char_poly_integer, companion_matrix, t_parameter};
    use crate::models::m6_family;

    #[test]
    fn m6_two_three_certified() {
        let fam = m6_family(2).unwrap();
        let target = companion_matrix(&char_poly_integer(2, 3).unwrap()).unwrap();
        let c = bock_certificate(&fam.spec, t_parameter(2, 3).unwrap(), &target).unwrap();
        assert!(c.certified, "{c:?}");
        let p = c.conjugator.unwrap();
        assert!(p.residual < 1e-9);
    }

    #[test]
    fn wrong_time_not_certified() {
        let fam = m6_family(2).unwrap();
        let target = companion_matrix(&char_poly_integer(2, 3).unwrap()).unwrap();
        let c = bock_certificate(&fam.spec, 1.0, &target).unwrap();
        assert!(!c.certified);
        assert!(bock_certificate(&fam.spec, 0.0, &target).is_err());
    }

    #[test]
    fn bottleneck() {
        let a = [Complex64::new(0.0, 0.0), Complex64::new(10.0, 0.0)];
        let b = [Complex64::new(10.5, 0.0), Complex64::new(0.1, 0.0)];
        assert!((bottleneck_distance(&a, &b) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn newton_polish_improves() {
        let c = [1.0, -3.0, 2.0];
        let mut r = [Complex64::new(0.9, 0.01), Complex64::new(2.2, 0.0)];
        polish_roots(&c, &mut r);
        assert!((r[0] - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((r[1] - Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }
}
