use std::ops::ControlFlow;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{verify_and_classify, LcsStructure};
use crate::exterior::linalg::{rank_and_kernel, rref};
use crate::exterior::{differential_matrix, exterior_basis, KForm, LieAlgebra, MultiIndex};
use crate::scalar::{frac, int, ExactScalar};
use crate::Result;

pub const DEFAULT_TRIALS: usize = 200;

/// What a search did, in addition to what it found.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub found: Option<LcsStructure>,
    /// Number of sampled `ω` that were tested.
    pub trials_used: usize,
    /// Lee form candidates whose `ω`-solution space is nonzero.
    pub theta_candidates: usize,
}

fn dense_columns(cols: &[Vec<(usize, ExactScalar)>], nrows: usize) -> Vec<Vec<ExactScalar>> {
    let mut rows = vec![vec![ExactScalar::zero(); cols.len()]; nrows];
    for (j, col) in cols.iter().enumerate() {
        for (r, v) in col {
            rows[*r][j] = v.clone();
        }
    }
    rows
}

/// Grid values for one pivot coordinate, zero excluded, in search order.
fn grid_values() -> [ExactScalar; 6] {
    [int(1), int(-1), frac(1, 2), frac(-1, 2), int(2), int(-2)]
}

/// Visits grid points of `r` coordinates ordered by support size, then
/// support (lexicographic), then values.
fn visit_grid<F>(r: usize, mut f: F)
where
    F: FnMut(&[ExactScalar]) -> ControlFlow<()>,
{
    let values = grid_values();
    for size in 0..=r {
        let mut support: Vec<usize> = (0..size).collect();
        loop {
            let mut digits = vec![0usize; size];
            loop {
                let mut point = vec![ExactScalar::zero(); r];
                for (s, &d) in support.iter().zip(&digits) {
                    point[*s] = values[d].clone();
                }
                if f(&point).is_break() {
                    return;
                }
                // odometer, last position fastest
                let mut pos = size;
                while pos > 0 && digits[pos - 1] == values.len() - 1 {
                    digits[pos - 1] = 0;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
                digits[pos - 1] += 1;
            }
            // next support of the same size
            let mut k = size;
            while k > 0 && support[k - 1] == r - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            support[k - 1] += 1;
            for s in k..size {
                support[s] = support[s - 1] + 1;
            }
        }
    }
}

/// Randomized search for an LCS structure.
///
/// Lee form candidates are grid points `{0, ±½, ±1, ±2}` on the pivot
/// coordinates of the reduced basis of closed 1-forms, `θ = 0` first. For
/// each candidate the space `{ω : d_θ ω = 0}` is computed exactly;
/// candidates with a zero space are skipped. Trials then cycle through the
/// remaining candidates, sampling `ω` with integer coefficients in `−3..=3`
/// on the basis of that space and testing nondegeneracy. Deterministic for
/// a given seed. Finding nothing proves nothing.
///
/// With `strict`, `θ = 0` is not a candidate, so symplectic structures are
/// never returned.
pub fn lcs_search_with_stats(g: &LieAlgebra, trials: usize, seed: u64, strict: bool) -> Result<SearchOutcome> {
    let n = g.dim();
    let closed = {
        let rows = dense_columns(&differential_matrix(g, 1, None)?, exterior_basis(n, 2).len());
        let (_, kernel) = rank_and_kernel(&rows, n)?;
        rref(&kernel, n)?.0
    };
    let lambda2 = exterior_basis(n, 2);
    let lambda3_len = exterior_basis(n, 3).len();
    let mut candidates: Vec<(KForm, Vec<Vec<ExactScalar>>)> = Vec::new();
    let mut error = None;
    visit_grid(closed.len(), |coords| {
        if candidates.len() >= trials {
            return ControlFlow::Break(());
        }
        let mut cov = vec![ExactScalar::zero(); n];
        for (a, row) in coords.iter().zip(&closed) {
            if a.is_zero() {
                continue;
            }
            for (c, v) in cov.iter_mut().zip(row) {
                *c += a * v;
            }
        }
        let theta = KForm::from_covector(&cov);
        if strict && theta.is_zero() {
            return ControlFlow::Continue(());
        }
        let space = differential_matrix(g, 2, Some(&theta))
            .and_then(|cols| rank_and_kernel(&dense_columns(&cols, lambda3_len), lambda2.len()));
        match space {
            Ok((_, kernel)) if !kernel.is_empty() => candidates.push((theta, kernel)),
            Ok(_) => {}
            Err(e) => {
                error = Some(e);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = error {
        return Err(e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used = 0;
    if !candidates.is_empty() {
        for t in 0..trials {
            let (theta, basis) = &candidates[t % candidates.len()];
            used += 1;
            let mut coords = vec![ExactScalar::zero(); lambda2.len()];
            for b in basis {
                let c = int(rng.random_range(-3i64..=3));
                if c.is_zero() {
                    continue;
                }
                for (x, v) in coords.iter_mut().zip(b) {
                    *x += &c * v;
                }
            }
            let omega = omega_from_coords(n, &lambda2, &coords)?;
            if omega.is_zero() {
                continue;
            }
            let s = verify_and_classify(g, &omega, theta)?;
            if s.verified {
                return Ok(SearchOutcome {
                    found: Some(s),
                    trials_used: used,
                    theta_candidates: candidates.len(),
                });
            }
        }
    }
    Ok(SearchOutcome {
        found: None,
        trials_used: used,
        theta_candidates: candidates.len(),
    })
}

fn omega_from_coords(n: usize, basis: &[MultiIndex], coords: &[ExactScalar]) -> Result<KForm> {
    KForm::from_terms(
        n,
        2,
        basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.as_slice().to_vec(), c.clone())),
    )
}

/// [`lcs_search_with_stats`] returning only the structure; symplectic
/// structures are allowed.
pub fn lcs_search(g: &LieAlgebra, trials: usize, seed: u64) -> Result<Option<LcsStructure>> {
    Ok(lcs_search_with_stats(g, trials, seed, false)?.found)
}

/// Like [`lcs_search`] but only for structures with `θ ≠ 0`.
pub fn lcs_search_strict(g: &LieAlgebra, trials: usize, seed: u64) -> Result<Option<LcsStructure>> {
    Ok(lcs_search_with_stats(g, trials, seed, true)?.found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::named_4d;

    #[test]
    fn grid_order() {
        let mut seen = Vec::new();
        visit_grid(2, |p| {
            seen.push(p.to_vec());
            if seen.len() == 8 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(seen[0], vec![int(0), int(0)]);
        assert_eq!(seen[1], vec![int(1), int(0)]);
        assert_eq!(seen[2], vec![int(-1), int(0)]);
        assert_eq!(seen[7], vec![int(0), int(1)]);
        let mut count = 0;
        visit_grid(2, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 49);
    }

    #[test]
    fn abelian_symplectic_first() {
        let out = lcs_search_with_stats(&LieAlgebra::abelian(4), DEFAULT_TRIALS, 1, false).unwrap();
        let s = out.found.unwrap();
        assert!(s.symplectic);
        assert_eq!(out.trials_used, 1);
    }

    #[test]
    fn r4_found() {
        let g = named_4d("r4", &[]).unwrap();
        let s = lcs_search(&g, DEFAULT_TRIALS, 7).unwrap().unwrap();
        assert!(s.verified);
    }

    #[test]
    fn r4prime_mu_zero_lambda_none() {
        let g = named_4d("r4prime_mu_lambda", &[int(1), int(0)]).unwrap();
        assert!(lcs_search_strict(&g, DEFAULT_TRIALS, 7).unwrap().is_none());
        // the algebra is symplectic though
        assert!(lcs_search(&g, DEFAULT_TRIALS, 7).unwrap().unwrap().symplectic);
    }

    #[test]
    fn strict_search_on_r4() {
        let g = named_4d("r4", &[]).unwrap();
        let s = lcs_search_strict(&g, DEFAULT_TRIALS, 7).unwrap().unwrap();
        assert!(s.verified && !s.theta.is_zero());
    }

    #[test]
    fn deterministic() {
        let g = named_4d("r3_lambda_xR", &[frac(1, 2)]).unwrap();
        let a = lcs_search(&g, 50, 3).unwrap();
        let b = lcs_search(&g, 50, 3).unwrap();
        assert_eq!(a, b);
    }
}
