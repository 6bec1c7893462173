use num_traits::{One, Zero};

use super::{AlmostAbelianSpec, HermitianData};
use crate::exterior::{KForm, LieAlgebra};
use crate::scalar::{self, ExactScalar};
use crate::{Error, Result};

/// An algebra together with a candidate pair `(ω, θ)`.
#[derive(Clone, Debug)]
pub struct FamilyStructure {
    pub spec: AlmostAbelianSpec,
    pub algebra: LieAlgebra,
    pub omega: KForm,
    pub theta: KForm,
}

// basis (f1, f2, u_1..u_n, v_1..v_n)
fn u(i: usize) -> usize {
    2 + i
}
fn v(n: usize, i: usize) -> usize {
    2 + n + i
}

fn family_labels(n: usize) -> Vec<String> {
    let mut l = vec!["f1".to_string(), "f2".to_string()];
    l.extend((1..=n).map(|i| format!("u{i}")));
    l.extend((1..=n).map(|i| format!("v{i}")));
    l
}

/// `f¹∧f² + Σ uⁱ∧vⁱ` on `ℝ^{2n+2}`.
pub(crate) fn standard_omega(n: usize) -> KForm {
    let dim = 2 * n + 2;
    let mut terms = vec![(vec![0, 1], ExactScalar::one())];
    terms.extend((0..n).map(|i| (vec![u(i), v(n, i)], ExactScalar::one())));
    KForm::from_terms(dim, 2, terms).expect("valid indices")
}

fn check_square(b: &[Vec<ExactScalar>], size: usize) -> Result<()> {
    if b.len() != size || b.iter().any(|r| r.len() != size) {
        return Err(Error::DimensionMismatch {
            expected: size,
            found: b.len(),
        });
    }
    Ok(())
}

/// `Ω = [[0, I], [−I, 0]]`, the Gram matrix of `Σ uⁱ∧vⁱ`.
fn omega_matrix(n: usize) -> Vec<Vec<ExactScalar>> {
    let mut o = vec![vec![ExactScalar::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        o[i][n + i] = ExactScalar::one();
        o[n + i][i] = -ExactScalar::one();
    }
    o
}

fn is_zero_matrix(m: &[Vec<ExactScalar>]) -> bool {
    m.iter().all(|r| r.iter().all(Zero::is_zero))
}

fn in_sp(b: &[Vec<ExactScalar>], n: usize) -> bool {
    use crate::exterior::linalg::{mat_mul, transpose};
    let o = omega_matrix(n);
    let lhs = mat_mul(&transpose(b), &o);
    let rhs = mat_mul(&o, b);
    let sum: Vec<Vec<ExactScalar>> = lhs
        .iter()
        .zip(&rhs)
        .map(|(a, c)| a.iter().zip(c).map(|(x, y)| x + y).collect())
        .collect();
    is_zero_matrix(&sum)
}

fn in_u(b: &[Vec<ExactScalar>], n: usize) -> bool {
    use crate::exterior::linalg::mat_mul;
    let antisymmetric = (0..2 * n).all(|i| (0..2 * n).all(|j| b[i][j] == -b[j][i].clone()));
    // J on (u, v) is −Ω in the column convention
    let j0: Vec<Vec<ExactScalar>> = omega_matrix(n)
        .into_iter()
        .map(|r| r.into_iter().map(|x| -x).collect())
        .collect();
    let commutator: Vec<Vec<ExactScalar>> = mat_mul(b, &j0)
        .iter()
        .zip(&mat_mul(&j0, b))
        .map(|(a, c)| a.iter().zip(c).map(|(x, y)| x - y).collect())
        .collect();
    antisymmetric && is_zero_matrix(&commutator)
}

fn ideal_matrix(
    mu: &ExactScalar,
    lambda: &ExactScalar,
    w: &[ExactScalar],
    b: &[Vec<ExactScalar>],
) -> Result<AlmostAbelianSpec> {
    let size = b.len();
    let a: Vec<Vec<ExactScalar>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { lambda + &b[i][j] } else { b[i][j].clone() })
                .collect()
        })
        .collect();
    AlmostAbelianSpec::block(mu.clone(), w, &a)
}

/// The LCK family `ad_{f₁} = diag(μ, λI + B)` with `B ∈ 𝔲(n)`, standard
/// complex structure `Jf₁ = f₂`, `Juᵢ = vᵢ`, fundamental form
/// `ω = f¹∧f² + Σuⁱ∧vⁱ` and Lee form `θ = −2λf¹`.
pub fn lck_family(
    n: usize,
    mu: &ExactScalar,
    lambda: &ExactScalar,
    b: &[Vec<ExactScalar>],
) -> Result<(LieAlgebra, HermitianData)> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    check_square(b, 2 * n)?;
    if !in_u(b, n) {
        return Err(Error::Precondition(
            "B must be antisymmetric and commute with J".into(),
        ));
    }
    let spec = ideal_matrix(mu, lambda, &vec![ExactScalar::zero(); 2 * n], b)?;
    let dim = 2 * n + 2;
    let mut j = vec![vec![ExactScalar::zero(); dim]; dim];
    j[1][0] = ExactScalar::one();
    j[0][1] = -ExactScalar::one();
    for i in 0..n {
        j[v(n, i)][u(i)] = ExactScalar::one();
        j[u(i)][v(n, i)] = -ExactScalar::one();
    }
    let theta = KForm::monomial(dim, &[0], lambda * scalar::int(-2))?;
    let g = spec.build().with_labels(family_labels(n))?;
    Ok((
        g,
        HermitianData {
            j,
            omega: standard_omega(n),
            theta,
        },
    ))
}

/// The LCS family with `M = (μ | wᵗ ; 0 | λI + B)`, `B ∈ 𝔰𝔭(n, ℝ)`, `λ ≠ 0`.
pub fn lcs_family(
    n: usize,
    mu: &ExactScalar,
    lambda: &ExactScalar,
    w: &[ExactScalar],
    b: &[Vec<ExactScalar>],
) -> Result<FamilyStructure> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    if lambda.is_zero() {
        return Err(Error::Precondition("λ must be nonzero".into()));
    }
    check_square(b, 2 * n)?;
    if w.len() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: w.len(),
        });
    }
    if !in_sp(b, n) {
        return Err(Error::Precondition("B must be infinitesimally symplectic".into()));
    }
    let spec = ideal_matrix(mu, lambda, w, b)?;
    let dim = 2 * n + 2;
    Ok(FamilyStructure {
        algebra: spec.build().with_labels(family_labels(n))?,
        spec,
        omega: standard_omega(n),
        theta: KForm::monomial(dim, &[0], lambda * scalar::int(-2))?,
    })
}

/// `M = diag(1 | 0, 1/n, …, (n−1)/n, −1/n, …, −1)` in the basis
/// `(f₂, u₁, …, uₙ, v₁, …, vₙ)`.
pub fn m6_matrix(n: usize) -> AlmostAbelianSpec {
    let size = 2 * n + 1;
    let mut m = vec![vec![ExactScalar::zero(); size]; size];
    m[0][0] = ExactScalar::one();
    let nn = n as i64;
    for i in 0..n {
        m[1 + i][1 + i] = scalar::frac(i as i64, nn);
        m[1 + n + i][1 + n + i] = scalar::frac(-(i as i64 + 1), nn);
    }
    AlmostAbelianSpec { m, label: Some(format!("m6({n})")) }
}

/// The unimodular diagonal family with `ω = f¹∧f² + Σuⁱ∧vⁱ` and
/// `θ = (1/n) f¹`.
pub fn m6_family(n: usize) -> Result<FamilyStructure> {
    if n < 2 {
        return Err(Error::Precondition("n must be at least 2".into()));
    }
    let spec = m6_matrix(n);
    let dim = 2 * n + 2;
    Ok(FamilyStructure {
        algebra: spec.build().with_labels(family_labels(n))?,
        spec,
        omega: standard_omega(n),
        theta: KForm::monomial(dim, &[0], scalar::frac(1, n as i64))?,
    })
}

/// `ad_{f₁} = (1 | [[−½, −b], [b, −½]])`, the 4-dimensional unimodular LCK
/// algebras with `μ = 1`.
pub fn g_b(b: &ExactScalar) -> AlmostAbelianSpec {
    let half = scalar::frac(-1, 2);
    AlmostAbelianSpec::block(
        ExactScalar::one(),
        &[ExactScalar::zero(), ExactScalar::zero()],
        &[vec![half.clone(), -b.clone()], vec![b.clone(), half]],
    )
    .expect("2x2 block")
    .with_label(format!("g_b({})", scalar::format(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{ce_differential, wedge};
    use crate::scalar::{frac, int};

    fn zero(k: usize) -> Vec<Vec<ExactScalar>> {
        vec![vec![int(0); k]; k]
    }

    fn check_lcs_equation(g: &LieAlgebra, omega: &KForm, theta: &KForm) {
        assert!(ce_differential(theta, g).unwrap().is_zero());
        assert_eq!(ce_differential(omega, g).unwrap(), wedge(theta, omega).unwrap());
    }

    #[test]
    fn lck_unimodular_iff_lambda() {
        let (g, h) = lck_family(2, &int(1), &frac(-1, 4), &zero(4)).unwrap();
        assert!(g.validate().unimodular);
        check_lcs_equation(&g, &h.omega, &h.theta);
        assert!(h.j_squared_is_minus_identity());
        let (g2, _) = lck_family(2, &int(1), &frac(-1, 3), &zero(4)).unwrap();
        assert!(!g2.validate().unimodular);
    }

    #[test]
    fn lck_kahler_when_lambda_zero() {
        let (g, h) = lck_family(2, &int(3), &int(0), &zero(4)).unwrap();
        assert!(h.theta.is_zero());
        assert!(ce_differential(&h.omega, &g).unwrap().is_zero());
    }

    #[test]
    fn lck_n1_matches_g_b() {
        let y = frac(2, 3);
        let b = vec![vec![int(0), -y.clone()], vec![y.clone(), int(0)]];
        let (g, _) = lck_family(1, &int(1), &frac(-1, 2), &b).unwrap();
        let expected = g_b(&y).build();
        assert_eq!(g.brackets(), expected.brackets());
    }

    #[test]
    fn lck_rejects_b_outside_u() {
        let mut b = zero(4);
        b[0][1] = int(1);
        b[1][0] = int(-1);
        // rotation between u1 and u2 commutes with J only together with v1, v2
        assert!(lck_family(2, &int(1), &int(1), &b).is_err());
    }

    #[test]
    fn lcs_family_with_w() {
        let s = lcs_family(2, &int(1), &frac(-1, 4), &[int(1), int(0), int(0), int(0)], &zero(4)).unwrap();
        check_lcs_equation(&s.algebra, &s.omega, &s.theta);
        assert_eq!(s.algebra.bracket_basis(0, 2)[1], int(1));
    }

    #[test]
    fn lcs_family_rejects() {
        assert!(lcs_family(2, &int(1), &int(0), &vec![int(0); 4], &zero(4)).is_err());
        let mut b = zero(4);
        b[0][0] = int(1);
        assert!(lcs_family(2, &int(1), &int(1), &vec![int(0); 4], &b).is_err());
        // diag(1, 0, -1, 0) is in sp(2)
        b[2][2] = int(-1);
        assert!(lcs_family(2, &int(1), &int(1), &vec![int(0); 4], &b).is_ok());
    }

    #[test]
    fn m6_traceless_and_lcs() {
        for n in 2..=5 {
            let s = m6_family(n).unwrap();
            assert!(s.spec.trace().is_zero());
            assert!(s.algebra.validate().unimodular);
            check_lcs_equation(&s.algebra, &s.omega, &s.theta);
        }
    }
}
