//! Locally conformal symplectic and Kähler structures.
//!
//! A pair `(ω, θ)` with `ω` nondegenerate is LCS when `dθ = 0` and
//! `dω = θ∧ω`. Everything here is exact.

mod four;
mod hermitian;
mod search;
pub mod table1;

pub use four::{lcs_admissible_4d, lcs_from_trace_4d, Admissibility, Canonical4d};
pub use hermitian::{lck_verify, nijenhuis, LckReport, NijenhuisReport};
pub use search::{lcs_search, lcs_search_strict, lcs_search_with_stats, SearchOutcome, DEFAULT_TRIALS};

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exterior::linalg::{rank_and_kernel, solve};
use crate::exterior::{ce_differential, d_theta, differential_matrix, exterior_basis, wedge, KForm, LieAlgebra, MultiIndex};
use crate::scalar::ExactScalar;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    FirstKind,
    SecondKind,
    Unclassified,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::FirstKind => "first_kind",
            Kind::SecondKind => "second_kind",
            Kind::Unclassified => "unclassified",
        })
    }
}

/// A candidate pair `(ω, θ)` together with what was checked about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsStructure {
    pub omega: KForm,
    pub theta: KForm,
    pub theta_closed: bool,
    pub lcs_equation: bool,
    pub nondegenerate: bool,
    /// All three checks above hold.
    pub verified: bool,
    /// Verified with `θ = 0`.
    pub symplectic: bool,
    pub kind: Kind,
}

/// Infinitesimal automorphisms `𝔤_ω = {x : ω([x,y],z) + ω(y,[x,z]) = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSubalgebra {
    pub basis: Vec<Vec<ExactScalar>>,
}

impl AutomorphismSubalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether the span of `basis` is closed under the bracket of `g`.
    pub fn is_subalgebra(&self, g: &LieAlgebra) -> Result<bool> {
        let n = g.dim();
        let k = self.basis.len();
        // [x, y] must lie in span(basis): rank does not grow when appended
        let base_rank = rank_and_kernel(&self.basis, n)?.0;
        for a in 0..k {
            for b in a + 1..k {
                let mut rows = self.basis.clone();
                rows.push(g.bracket(&self.basis[a], &self.basis[b]));
                if rank_and_kernel(&rows, n)?.0 != base_rank {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Result of solving `dω = θ∧ω` for `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeeForm {
    pub theta: KForm,
    pub closed: bool,
}

/// Gram matrix `Ω_{ab} = ω(e_a, e_b)` of a 2-form.
pub fn gram_matrix(omega: &KForm) -> Vec<Vec<ExactScalar>> {
    let n = omega.dim();
    let mut m = vec![vec![ExactScalar::zero(); n]; n];
    for (idx, c) in omega.terms() {
        let (a, b) = (idx.as_slice()[0], idx.as_slice()[1]);
        m[a][b] = c.clone();
        m[b][a] = -c.clone();
    }
    m
}

fn check_form(f: &KForm, degree: usize, g: &LieAlgebra) -> Result<()> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: f.dim(),
        });
    }
    if f.degree() != degree {
        return Err(Error::Precondition(format!(
            "expected a {degree}-form, got degree {}",
            f.degree()
        )));
    }
    Ok(())
}

/// Whether the top wedge power `ω^{dim/2}` is nonzero.
pub fn nondegenerate(omega: &KForm, g: &LieAlgebra) -> Result<bool> {
    check_form(omega, 2, g)?;
    if g.dim() % 2 == 1 {
        return Err(Error::Precondition("nondegeneracy needs even dimension".into()));
    }
    let mut power = KForm::constant(g.dim(), ExactScalar::one());
    for _ in 0..g.dim() / 2 {
        power = wedge(&power, omega)?;
        if power.is_zero() {
            return Ok(false);
        }
    }
    Ok(!power.is_zero())
}

/// Checks `dθ = 0`, `dω = θ∧ω` and nondegeneracy.
pub fn lcs_verify(g: &LieAlgebra, omega: &KForm, theta: &KForm) -> Result<LcsStructure> {
    check_form(omega, 2, g)?;
    check_form(theta, 1, g)?;
    let theta_closed = ce_differential(theta, g)?.is_zero();
    let lcs_equation = ce_differential(omega, g)? == wedge(theta, omega)?;
    let nondeg = g.dim() % 2 == 0 && nondegenerate(omega, g)?;
    let verified = theta_closed && lcs_equation && nondeg;
    Ok(LcsStructure {
        omega: omega.clone(),
        theta: theta.clone(),
        theta_closed,
        lcs_equation,
        nondegenerate: nondeg,
        verified,
        symplectic: verified && theta.is_zero(),
        kind: Kind::Unclassified,
    })
}

fn index_of(dim: usize, k: usize) -> HashMap<MultiIndex, usize> {
    exterior_basis(dim, k).into_iter().enumerate().map(|(i, m)| (m, i)).collect()
}

fn coordinates(f: &KForm, index: &HashMap<MultiIndex, usize>) -> Vec<ExactScalar> {
    let mut v = vec![ExactScalar::zero(); index.len()];
    for (m, c) in f.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// Solves `dω = θ∧ω` for `θ`. The solution is unique because wedging with
/// a nondegenerate `ω` is injective on 1-forms (dimension ≥ 4); this is
/// checked, and a failure is reported as a precondition error.
pub fn lee_form_solve(g: &LieAlgebra, omega: &KForm) -> Result<Option<LeeForm>> {
    if !nondegenerate(omega, g)? {
        return Err(Error::Precondition("ω is degenerate".into()));
    }
    let n = g.dim();
    let index = index_of(n, 3);
    // column i = coordinates of e^i ∧ ω
    let cols: Vec<Vec<ExactScalar>> = (0..n)
        .map(|i| Ok(coordinates(&wedge(&KForm::monomial(n, &[i], ExactScalar::one())?, omega)?, &index)))
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<ExactScalar>> = (0..index.len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let (rank, _) = rank_and_kernel(&rows, n)?;
    if rank != n {
        return Err(Error::Precondition(
            "wedging with ω is not injective on 1-forms".into(),
        ));
    }
    let rhs = coordinates(&ce_differential(omega, g)?, &index);
    Ok(solve(&rows, &rhs, n)?.map(|t| {
        let theta = KForm::from_covector(&t);
        let closed = ce_differential(&theta, g).map(|d| d.is_zero()).unwrap_or(false);
        LeeForm { theta, closed }
    }))
}

/// The kernel of `x ↦ L_x ω` on the Lie algebra.
pub fn automorphism_algebra(g: &LieAlgebra, omega: &KForm) -> Result<AutomorphismSubalgebra> {
    check_form(omega, 2, g)?;
    let n = g.dim();
    let w = gram_matrix(omega);
    let form = |a: &[ExactScalar], b: &[ExactScalar]| -> ExactScalar {
        let mut s = ExactScalar::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() && !w[i][j].is_zero() {
                    s += ai * bj * &w[i][j];
                }
            }
        }
        s
    };
    let unit = |a: usize| {
        let mut v = vec![ExactScalar::zero(); n];
        v[a] = ExactScalar::one();
        v
    };
    let mut rows = Vec::new();
    for y in 0..n {
        for z in y + 1..n {
            let row: Vec<ExactScalar> = (0..n)
                .map(|i| form(&g.bracket_basis(i, y), &unit(z)) + form(&unit(y), &g.bracket_basis(i, z)))
                .collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let (_, kernel) = rank_and_kernel(&rows, n)?;
    Ok(AutomorphismSubalgebra { basis: kernel })
}

/// First kind iff `θ` does not vanish on `𝔤_ω`.
pub fn classify_kind(g: &LieAlgebra, s: &LcsStructure) -> Result<Kind> {
    if !s.verified {
        return Err(Error::Precondition("structure is not verified".into()));
    }
    if s.theta.is_zero() {
        return Err(Error::Precondition("θ = 0: symplectic, kind undefined".into()));
    }
    let aut = automorphism_algebra(g, &s.omega)?;
    let theta = s.theta.to_covector();
    let surjective = aut
        .basis
        .iter()
        .any(|x| !x.iter().zip(&theta).map(|(a, b)| a * b).sum::<ExactScalar>().is_zero());
    Ok(if surjective { Kind::FirstKind } else { Kind::SecondKind })
}

/// [`lcs_verify`] followed by [`classify_kind`] when applicable.
pub fn verify_and_classify(g: &LieAlgebra, omega: &KForm, theta: &KForm) -> Result<LcsStructure> {
    let mut s = lcs_verify(g, omega, theta)?;
    if s.verified && !theta.is_zero() {
        s.kind = classify_kind(g, &s)?;
    }
    Ok(s)
}

/// A 1-form `η` with `d_θ η = ω`, if one exists.
pub fn dtheta_exact(g: &LieAlgebra, omega: &KForm, theta: &KForm) -> Result<Option<KForm>> {
    check_form(omega, 2, g)?;
    if !d_theta(omega, theta, g)?.is_zero() {
        return Err(Error::Precondition("ω is not d_θ-closed".into()));
    }
    let n = g.dim();
    let cols = differential_matrix(g, 1, Some(theta))?;
    let index = index_of(n, 2);
    let mut rows = vec![vec![ExactScalar::zero(); n]; index.len()];
    for (j, col) in cols.iter().enumerate() {
        for (r, v) in col {
            rows[*r][j] = v.clone();
        }
    }
    let rhs = coordinates(omega, &index);
    Ok(solve(&rows, &rhs, n)?.map(|eta| KForm::from_covector(&eta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{lcs_family, m6_family, named_4d};
    use crate::scalar::{frac, int};

    fn form2(dim: usize, terms: &[(usize, usize, i64)]) -> KForm {
        KForm::from_terms(dim, 2, terms.iter().map(|&(a, b, c)| (vec![a, b], int(c)))).unwrap()
    }

    #[test]
    fn nondegeneracy() {
        let g = LieAlgebra::abelian(4);
        assert!(nondegenerate(&form2(4, &[(0, 1, 1), (2, 3, 1)]), &g).unwrap());
        assert!(!nondegenerate(&form2(4, &[(0, 1, 1)]), &g).unwrap());
        assert!(nondegenerate(&form2(3, &[(0, 1, 1)]), &LieAlgebra::abelian(3)).is_err());
    }

    #[test]
    fn m6_admits_symplectic_form() {
        let s = m6_family(2).unwrap();
        // f1∧u1 + f2∧v2 + u2∧v1 in the basis (f1, f2, u1, u2, v1, v2)
        let eta = form2(6, &[(0, 2, 1), (1, 5, 1), (3, 4, 1)]);
        assert!(nondegenerate(&eta, &s.algebra).unwrap());
        assert!(ce_differential(&eta, &s.algebra).unwrap().is_zero());
    }

    #[test]
    fn symplectic_with_theta_fails() {
        let g = LieAlgebra::abelian(4);
        let w = form2(4, &[(0, 1, 1), (2, 3, 1)]);
        let s = lcs_verify(&g, &w, &KForm::zero(4, 1)).unwrap();
        assert!(s.verified && s.symplectic);
        let t = KForm::monomial(4, &[0], int(1)).unwrap();
        assert!(!lcs_verify(&g, &w, &t).unwrap().verified);
    }

    #[test]
    fn lee_forms() {
        let g = named_4d("r4", &[]).unwrap();
        let w = form2(4, &[(0, 1, 1), (2, 3, 1)]);
        let lee = lee_form_solve(&g, &w).unwrap().unwrap();
        assert_eq!(lee.theta, KForm::monomial(4, &[0], int(-2)).unwrap());
        assert!(lee.closed);
        let s = m6_family(2).unwrap();
        let lee = lee_form_solve(&s.algebra, &s.omega).unwrap().unwrap();
        assert_eq!(lee.theta, KForm::monomial(6, &[0], frac(1, 2)).unwrap());
        let sym = lee_form_solve(&LieAlgebra::abelian(4), &w).unwrap().unwrap();
        assert!(sym.theta.is_zero());
    }

    #[test]
    fn lee_form_not_closed_in_dim_four() {
        let g = named_4d("n4", &[]).unwrap();
        let w = form2(4, &[(0, 1, 1), (2, 3, 1)]);
        let lee = lee_form_solve(&g, &w).unwrap().unwrap();
        assert_eq!(lee.theta, KForm::monomial(4, &[3], int(-1)).unwrap());
        assert!(!lee.closed);
    }

    #[test]
    fn lee_form_absent_in_dim_six() {
        // pairs (u1, v2) and (u2, v1) have different weight sums
        let s = m6_family(2).unwrap();
        let w = form2(6, &[(0, 1, 1), (2, 5, 1), (3, 4, 1)]);
        assert!(lee_form_solve(&s.algebra, &w).unwrap().is_none());
    }

    #[test]
    fn automorphisms_of_abelian_is_everything() {
        let g = LieAlgebra::abelian(4);
        let a = automorphism_algebra(&g, &form2(4, &[(0, 1, 1), (2, 3, 1)])).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_subalgebra(&g).unwrap());
    }

    #[test]
    fn lcs_family_is_second_kind() {
        let zero = vec![vec![int(0); 4]; 4];
        let s = lcs_family(2, &int(1), &frac(-1, 4), &vec![int(0); 4], &zero).unwrap();
        let st = lcs_verify(&s.algebra, &s.omega, &s.theta).unwrap();
        assert!(st.verified);
        assert_eq!(classify_kind(&s.algebra, &st).unwrap(), Kind::SecondKind);
        let aut = automorphism_algebra(&s.algebra, &s.omega).unwrap();
        assert!(aut.basis.iter().all(|x| x[0].is_zero()));
        assert!(aut.is_subalgebra(&s.algebra).unwrap());
    }

    #[test]
    fn heisenberg_first_kind_and_exact() {
        let g = named_4d("h3xR", &[]).unwrap();
        let w = form2(4, &[(0, 1, 1), (2, 3, 1)]);
        let t = KForm::monomial(4, &[3], int(-1)).unwrap();
        let s = verify_and_classify(&g, &w, &t).unwrap();
        assert!(s.verified);
        assert_eq!(s.kind, Kind::FirstKind);
        let eta = dtheta_exact(&g, &w, &t).unwrap().unwrap();
        assert_eq!(d_theta(&eta, &t, &g).unwrap(), w);
        // regression value of the solver: η = −e^3
        assert_eq!(eta, KForm::monomial(4, &[2], int(-1)).unwrap());
    }

    #[test]
    fn abelian_not_exact() {
        let g = LieAlgebra::abelian(4);
        let w = form2(4, &[(0, 1, 1), (2, 3, 1)]);
        assert!(dtheta_exact(&g, &w, &KForm::zero(4, 1)).unwrap().is_none());
    }

    #[test]
    fn classify_preconditions() {
        let g = LieAlgebra::abelian(4);
        let w = form2(4, &[(0, 1, 1), (2, 3, 1)]);
        let s = lcs_verify(&g, &w, &KForm::zero(4, 1)).unwrap();
        assert!(classify_kind(&g, &s).is_err());
    }
}
