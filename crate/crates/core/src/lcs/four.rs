use num_traits::{One, Zero};

use super::{verify_and_classify, LcsStructure};
use crate::exterior::KForm;
use crate::models::AlmostAbelianSpec;
use crate::scalar::ExactScalar;
use crate::{Error, Result};

/// LCS pair from the trace of the ideal block: for `M = (μ | wᵗ ; 0 | A)`
/// with `tr A ≠ 0`, `ω = f¹∧f² + f³∧f⁴` and `θ = −tr(A) f¹`.
pub fn lcs_from_trace_4d(spec: &AlmostAbelianSpec) -> Result<LcsStructure> {
    if spec.d() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: spec.d(),
        });
    }
    if !spec.m[1][0].is_zero() || !spec.m[2][0].is_zero() {
        return Err(Error::Precondition("M is not in block form (μ | wᵗ ; 0 | A)".into()));
    }
    let tr_a = &spec.m[1][1] + &spec.m[2][2];
    if tr_a.is_zero() {
        return Err(Error::Precondition("tr(A) = 0".into()));
    }
    let g = spec.build();
    let omega = KForm::from_terms(4, 2, [(vec![0, 1], ExactScalar::one()), (vec![2, 3], ExactScalar::one())])?;
    let theta = KForm::monomial(4, &[0], -tr_a)?;
    let s = verify_and_classify(&g, &omega, &theta)?;
    debug_assert!(s.verified);
    Ok(s)
}

/// Jordan-type normal forms of a 3×3 matrix `M`, up to scaling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canonical4d {
    /// `diag(λ₁, λ₂, λ₃)`, not all zero.
    M1(ExactScalar, ExactScalar, ExactScalar),
    /// `μ ⊕ [[λ, 1], [0, λ]]`.
    M2 { mu: ExactScalar, lambda: ExactScalar },
    /// Single Jordan block with eigenvalue `μ`.
    M3 { mu: ExactScalar },
    /// `μ ⊕ [[λ, −1], [1, λ]]`.
    M4 { mu: ExactScalar, lambda: ExactScalar },
}

impl Canonical4d {
    pub fn matrix(&self) -> Vec<Vec<ExactScalar>> {
        let z = ExactScalar::zero;
        let o = ExactScalar::one;
        match self {
            Canonical4d::M1(a, b, c) => vec![
                vec![a.clone(), z(), z()],
                vec![z(), b.clone(), z()],
                vec![z(), z(), c.clone()],
            ],
            Canonical4d::M2 { mu, lambda } => vec![
                vec![mu.clone(), z(), z()],
                vec![z(), lambda.clone(), o()],
                vec![z(), z(), lambda.clone()],
            ],
            Canonical4d::M3 { mu } => vec![
                vec![mu.clone(), o(), z()],
                vec![z(), mu.clone(), o()],
                vec![z(), z(), mu.clone()],
            ],
            Canonical4d::M4 { mu, lambda } => vec![
                vec![mu.clone(), z(), z()],
                vec![z(), lambda.clone(), -o()],
                vec![z(), o(), lambda.clone()],
            ],
        }
    }

    pub fn spec(&self) -> AlmostAbelianSpec {
        AlmostAbelianSpec::new(self.matrix()).expect("3x3")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Admits(Box<LcsStructure>),
    AdmitsNot,
}

fn witness(spec: &AlmostAbelianSpec, omega: &[(usize, usize, i64)], theta: &[(usize, i64)]) -> Result<LcsStructure> {
    let g = spec.build();
    let w = KForm::from_terms(4, 2, omega.iter().map(|&(a, b, c)| (vec![a, b], ExactScalar::from_integer(c.into()))))?;
    let t = KForm::from_terms(4, 1, theta.iter().map(|&(a, c)| (vec![a], ExactScalar::from_integer(c.into()))))?;
    let s = verify_and_classify(&g, &w, &t)?;
    if !s.verified {
        return Err(Error::Precondition("built-in witness failed verification".into()));
    }
    Ok(s)
}

/// Decides whether `ℝ ⋉_M ℝ³` carries an LCS structure for a canonical `M`,
/// returning a verified witness when it does.
///
/// If some ideal basis vector `e_j` is an eigenvector, the remaining 2×2
/// block `A` has `tr A = tr M − M_jj` and a nonzero trace gives a witness.
/// The remaining cases are `M₂^{0,0}`, `M₃^0`, `M₄^{0,0}` (explicit
/// witnesses) and `M₄^{μ,0}` with `μ ≠ 0` (no LCS structure).
pub fn lcs_admissible_4d(canonical: &Canonical4d) -> Result<Admissibility> {
    let m = canonical.matrix();
    if m.iter().flatten().all(Zero::is_zero) {
        return Err(Error::Precondition("M = 0 is not a canonical form".into()));
    }
    let spec = canonical.spec();
    let trace: ExactScalar = (0..3).map(|i| m[i][i].clone()).sum();
    for j in 0..3 {
        let eigen_column = (0..3).all(|i| i == j || m[i][j].is_zero());
        if eigen_column && trace != m[j][j] {
            // basis order (f1, e_j, others) turns M into block form
            let others: Vec<usize> = (0..3).filter(|&i| i != j).collect();
            let tr_a = &trace - &m[j][j];
            let g = spec.build();
            let omega = KForm::from_terms(
                4,
                2,
                [
                    (vec![0, j + 1], ExactScalar::one()),
                    (vec![others[0] + 1, others[1] + 1], ExactScalar::one()),
                ],
            )?;
            let theta = KForm::monomial(4, &[0], -tr_a)?;
            let s = verify_and_classify(&g, &omega, &theta)?;
            if !s.verified {
                return Err(Error::Precondition("trace witness failed verification".into()));
            }
            return Ok(Admissibility::Admits(Box::new(s)));
        }
    }
    let s = match canonical {
        Canonical4d::M2 { mu, lambda } if mu.is_zero() && lambda.is_zero() => {
            witness(&spec, &[(0, 3, 1), (2, 1, 1)], &[(1, -1)])?
        }
        Canonical4d::M3 { mu } if mu.is_zero() => witness(&spec, &[(0, 2, 1), (3, 1, 1)], &[(3, 1)])?,
        Canonical4d::M4 { mu, lambda } if lambda.is_zero() => {
            if !mu.is_zero() {
                return Ok(Admissibility::AdmitsNot);
            }
            witness(&spec, &[(0, 3, 1), (2, 1, 1)], &[(1, 1)])?
        }
        other => {
            return Err(Error::Precondition(format!(
                "no witness rule for {other:?}"
            )))
        }
    };
    Ok(Admissibility::Admits(Box::new(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcs::Kind;
    use crate::scalar::{frac, int};

    fn admits(c: Canonical4d) -> LcsStructure {
        match lcs_admissible_4d(&c).unwrap() {
            Admissibility::Admits(s) => *s,
            Admissibility::AdmitsNot => panic!("{c:?} should admit"),
        }
    }

    #[test]
    fn trace_lemma() {
        let a = AlmostAbelianSpec::block(int(3), &[int(1), int(2)], &[vec![int(1), int(0)], vec![int(0), frac(1, 2)]]).unwrap();
        let s = lcs_from_trace_4d(&a).unwrap();
        assert!(s.verified);
        assert_eq!(s.theta, KForm::monomial(4, &[0], frac(-3, 2)).unwrap());
        let rot = AlmostAbelianSpec::block(int(1), &[int(0), int(0)], &[vec![int(0), int(-1)], vec![int(1), int(0)]]).unwrap();
        assert!(lcs_from_trace_4d(&rot).is_err());
        let m4 = AlmostAbelianSpec::block(int(5), &[int(0), int(0)], &[vec![int(1), int(-1)], vec![int(1), int(1)]]).unwrap();
        let s = lcs_from_trace_4d(&m4).unwrap();
        assert_eq!(s.theta, KForm::monomial(4, &[0], int(-2)).unwrap());
    }

    #[test]
    fn nonexistence_case() {
        assert_eq!(
            lcs_admissible_4d(&Canonical4d::M4 { mu: int(1), lambda: int(0) }).unwrap(),
            Admissibility::AdmitsNot
        );
    }

    #[test]
    fn hard_coded_witnesses() {
        let s = admits(Canonical4d::M2 { mu: int(0), lambda: int(0) });
        assert!(s.verified);
        let s = admits(Canonical4d::M3 { mu: int(0) });
        assert!(s.verified);
        let s = admits(Canonical4d::M4 { mu: int(0), lambda: int(0) });
        assert_eq!(s.kind, Kind::FirstKind);
    }

    #[test]
    fn generic_cases_admit() {
        for c in [
            Canonical4d::M1(int(1), int(2), int(3)),
            Canonical4d::M1(int(0), int(0), int(1)),
            Canonical4d::M1(int(1), int(-1), int(0)),
            Canonical4d::M2 { mu: int(1), lambda: int(0) },
            Canonical4d::M2 { mu: int(0), lambda: int(2) },
            Canonical4d::M3 { mu: frac(1, 2) },
            Canonical4d::M4 { mu: int(0), lambda: int(1) },
            Canonical4d::M4 { mu: int(2), lambda: frac(-1, 3) },
        ] {
            assert!(admits(c).verified);
        }
        assert!(lcs_admissible_4d(&Canonical4d::M1(int(0), int(0), int(0))).is_err());
    }
}
