use num_traits::{Signed, Zero};

use super::gram_matrix;
use crate::exterior::linalg::{is_positive_definite, mat_mul, mat_vec};
use crate::exterior::{ce_differential, wedge, LieAlgebra};
use crate::models::HermitianData;
use crate::scalar::ExactScalar;
use crate::{Error, Result};

/// Exact evaluation of `N_J(x,y) = [Jx,Jy] − [x,y] − J([Jx,y] + [x,Jy])` on
/// all basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisReport {
    pub zero: bool,
    /// Largest absolute coordinate over all pairs.
    pub max_abs: ExactScalar,
    /// First basis pair with `N_J ≠ 0`.
    pub witness: Option<(usize, usize)>,
}

pub fn nijenhuis(g: &LieAlgebra, j: &[Vec<ExactScalar>]) -> Result<NijenhuisReport> {
    let n = g.dim();
    if j.len() != n || j.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: j.len() });
    }
    let sq = mat_mul(j, j);
    let minus_identity = (0..n).all(|a| {
        (0..n).all(|b| {
            if a == b {
                sq[a][b] == -ExactScalar::from_integer(1.into())
            } else {
                sq[a][b].is_zero()
            }
        })
    });
    if !minus_identity {
        return Err(Error::Precondition("J² ≠ −I".into()));
    }
    let unit = |a: usize| {
        let mut v = vec![ExactScalar::zero(); n];
        v[a] = ExactScalar::from_integer(1.into());
        v
    };
    let mut max_abs = ExactScalar::zero();
    let mut witness = None;
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (unit(a), unit(b));
            let (jx, jy) = (mat_vec(j, &x), mat_vec(j, &y));
            let inner: Vec<ExactScalar> = g
                .bracket(&jx, &y)
                .iter()
                .zip(g.bracket(&x, &jy))
                .map(|(p, q)| p + q)
                .collect();
            let jinner = mat_vec(j, &inner);
            let value: Vec<ExactScalar> = g
                .bracket(&jx, &jy)
                .iter()
                .zip(g.bracket_basis(a, b))
                .zip(jinner)
                .map(|((p, q), r)| p - q - r)
                .collect();
            for c in &value {
                if c.abs() > max_abs {
                    max_abs = c.abs();
                }
            }
            if witness.is_none() && value.iter().any(|c| !c.is_zero()) {
                witness = Some((a, b));
            }
        }
    }
    Ok(NijenhuisReport {
        zero: witness.is_none(),
        max_abs,
        witness,
    })
}

/// Outcome of [`lck_verify`]; `failure` names the first failed condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LckReport {
    pub failure: Option<String>,
    /// Passed with `θ = 0`.
    pub kahler: bool,
}

impl LckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `J² = −I`, `N_J = 0`, that `g(x,y) = ω(x, Jy)` is symmetric
/// positive definite, `dθ = 0` and `dω = θ∧ω`.
pub fn lck_verify(g: &LieAlgebra, data: &HermitianData) -> Result<LckReport> {
    let fail = |why: &str| {
        Ok(LckReport {
            failure: Some(why.to_string()),
            kahler: false,
        })
    };
    if !data.j_squared_is_minus_identity() {
        return fail("J² ≠ −I");
    }
    if !nijenhuis(g, &data.j)?.zero {
        return fail("J is not integrable");
    }
    let metric = mat_mul(&gram_matrix(&data.omega), &data.j);
    let n = g.dim();
    if (0..n).any(|a| (0..n).any(|b| metric[a][b] != metric[b][a])) {
        return fail("ω(·, J·) is not symmetric");
    }
    if !is_positive_definite(&metric) {
        return fail("ω(·, J·) is not positive definite");
    }
    if !ce_differential(&data.theta, g)?.is_zero() {
        return fail("θ is not closed");
    }
    if ce_differential(&data.omega, g)? != wedge(&data.theta, &data.omega)? {
        return fail("dω ≠ θ∧ω");
    }
    Ok(LckReport {
        failure: None,
        kahler: data.theta.is_zero(),
    })
}
