use std::collections::HashMap;

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::form::{wedge, KForm, MultiIndex};
use crate::scalar::ExactScalar;
use crate::{Error, Result};

/// All strictly increasing `k`-tuples from `0..dim`, lexicographically.
pub fn exterior_basis(dim: usize, k: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    if k > dim {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(MultiIndex::new(idx.clone()).expect("increasing by construction"));
        // advance to the next combination
        let mut r = k;
        while r > 0 && idx[r - 1] == dim - k + r - 1 {
            r -= 1;
        }
        if r == 0 {
            return out;
        }
        idx[r - 1] += 1;
        for s in r..k {
            idx[s] = idx[s - 1] + 1;
        }
    }
}

/// `d e^k = −Σ_{i<j} c^k_{ij} e^i ∧ e^j` for every `k`, as term lists.
fn coframe_differentials(g: &LieAlgebra) -> Vec<Vec<(usize, usize, ExactScalar)>> {
    let mut out = vec![Vec::new(); g.dim()];
    for (&(i, j), m) in g.brackets() {
        for (&k, c) in m {
            out[k].push((i, j, -c.clone()));
        }
    }
    out
}

fn check_dim(a: &KForm, g: &LieAlgebra) -> Result<()> {
    if a.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: a.dim(),
        });
    }
    Ok(())
}

fn differential_with(alpha: &KForm, de: &[Vec<(usize, usize, ExactScalar)>]) -> KForm {
    let mut out = KForm::zero(alpha.dim(), alpha.degree() + 1);
    for (idx, c) in alpha.terms() {
        let idx = idx.as_slice();
        for (r, &ir) in idx.iter().enumerate() {
            for (a, b, v) in &de[ir] {
                let mut indices = Vec::with_capacity(idx.len() + 1);
                indices.extend_from_slice(&idx[..r]);
                indices.push(*a);
                indices.push(*b);
                indices.extend_from_slice(&idx[r + 1..]);
                if let Some((sorted, negative)) = MultiIndex::sorted_with_sign(indices) {
                    let mut t = c * v;
                    if negative ^ (r % 2 == 1) {
                        t = -t;
                    }
                    out.add_term(sorted, t);
                }
            }
        }
    }
    out
}

/// Chevalley–Eilenberg differential of a left-invariant form:
/// `dα(x_0,…,x_k) = Σ_{i<j} (−1)^{i+j} α([x_i,x_j], x_0,…,x̂_i,…,x̂_j,…,x_k)`.
pub fn ce_differential(alpha: &KForm, g: &LieAlgebra) -> Result<KForm> {
    check_dim(alpha, g)?;
    Ok(differential_with(alpha, &coframe_differentials(g)))
}

fn check_lee_form(theta: &KForm, g: &LieAlgebra) -> Result<()> {
    check_dim(theta, g)?;
    if theta.degree() != 1 {
        return Err(Error::Precondition(format!(
            "twisting form must have degree 1, got {}",
            theta.degree()
        )));
    }
    if !ce_differential(theta, g)?.is_zero() {
        return Err(Error::Precondition("twisting form is not closed".into()));
    }
    Ok(())
}

/// Twisted differential `d_θ α = dα − θ∧α` for a closed 1-form `θ`.
pub fn d_theta(alpha: &KForm, theta: &KForm, g: &LieAlgebra) -> Result<KForm> {
    check_lee_form(theta, g)?;
    check_dim(alpha, g)?;
    ce_differential(alpha, g)?.sub(&wedge(theta, alpha)?)
}

/// Matrix of `d` (or `d_θ`) from `Λ^k` to `Λ^{k+1}` in the
/// [`exterior_basis`] ordering, returned column by column: entry `j` lists
/// the nonzero coordinates `(row, value)` of the image of the `j`-th basis
/// `k`-form.
pub fn differential_matrix(
    g: &LieAlgebra,
    k: usize,
    theta: Option<&KForm>,
) -> Result<Vec<Vec<(usize, ExactScalar)>>> {
    if let Some(t) = theta {
        check_lee_form(t, g)?;
    }
    let dim = g.dim();
    let de = coframe_differentials(g);
    let target: HashMap<MultiIndex, usize> = exterior_basis(dim, k + 1)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let theta_terms: Vec<(usize, ExactScalar)> = theta
        .map(|t| t.terms().map(|(m, c)| (m.as_slice()[0], c.clone())).collect())
        .unwrap_or_default();
    let mut columns = Vec::new();
    for idx in exterior_basis(dim, k) {
        let mut basis_form = KForm::zero(dim, k);
        basis_form.add_term(idx.clone(), num_traits::One::one());
        let mut image = differential_with(&basis_form, &de);
        // − θ∧e^I
        for (i, c) in &theta_terms {
            let mut indices = vec![*i];
            indices.extend_from_slice(idx.as_slice());
            if let Some((sorted, negative)) = MultiIndex::sorted_with_sign(indices) {
                image.add_term(sorted, if negative { c.clone() } else { -c.clone() });
            }
        }
        let mut col: Vec<(usize, ExactScalar)> = image
            .terms()
            .filter(|(_, v)| !v.is_zero())
            .map(|(m, v)| (target[m], v.clone()))
            .collect();
        col.sort_by_key(|(r, _)| *r);
        columns.push(col);
    }
    Ok(columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn h3() -> LieAlgebra {
        LieAlgebra::from_structure_constants(3, [(0, 1, 2, int(1))]).unwrap()
    }

    #[test]
    fn basis_sizes_and_order() {
        assert_eq!(exterior_basis(5, 2).len(), 10);
        assert_eq!(exterior_basis(3, 0).len(), 1);
        assert!(exterior_basis(3, 4).is_empty());
        let b = exterior_basis(4, 2);
        assert_eq!(b[0].as_slice(), &[0, 1]);
        assert_eq!(b[5].as_slice(), &[2, 3]);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn heisenberg_coframe() {
        let e3 = KForm::monomial(3, &[2], int(1)).unwrap();
        let d = ce_differential(&e3, &h3()).unwrap();
        assert_eq!(d, KForm::monomial(3, &[0, 1], int(-1)).unwrap());
    }

    #[test]
    fn abelian_differential_vanishes() {
        let g = LieAlgebra::abelian(4);
        let a = KForm::from_terms(4, 2, [(vec![0, 1], int(3)), (vec![1, 3], int(-2))]).unwrap();
        assert!(ce_differential(&a, &g).unwrap().is_zero());
    }

    #[test]
    fn formula_agrees_with_evaluation_definition() {
        // r_{4,λ}-like algebra with several brackets, random 2-form
        let g = LieAlgebra::from_structure_constants(
            4,
            [(0, 1, 1, int(1)), (0, 2, 2, frac(1, 2)), (0, 2, 3, int(1)), (0, 3, 3, frac(1, 2))],
        )
        .unwrap();
        let a = KForm::from_terms(
            4,
            2,
            [(vec![0, 1], int(2)), (vec![1, 2], frac(-1, 3)), (vec![2, 3], int(5)), (vec![1, 3], int(1))],
        )
        .unwrap();
        let da = ce_differential(&a, &g).unwrap();
        let e = |i: usize| {
            let mut v = vec![int(0); 4];
            v[i] = int(1);
            v
        };
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    let xs = [e(x), e(y), e(z)];
                    let mut expected = int(0);
                    for i in 0..3 {
                        for j in i + 1..3 {
                            let br = g.bracket(&xs[i], &xs[j]);
                            let rest: Vec<Vec<ExactScalar>> =
                                (0..3).filter(|&s| s != i && s != j).map(|s| xs[s].clone()).collect();
                            let mut args = vec![br];
                            args.extend(rest);
                            let v = a.evaluate(&args).unwrap();
                            expected += if (i + j) % 2 == 0 { v } else { -v };
                        }
                    }
                    assert_eq!(da.evaluate(&xs).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn twisted_on_constants() {
        let g = LieAlgebra::abelian(3);
        let theta = KForm::monomial(3, &[0], int(2)).unwrap();
        let c = KForm::constant(3, int(5));
        assert_eq!(
            d_theta(&c, &theta, &g).unwrap(),
            KForm::monomial(3, &[0], int(-10)).unwrap()
        );
    }

    #[test]
    fn non_closed_twist_is_rejected() {
        let theta = KForm::monomial(3, &[2], int(1)).unwrap();
        let a = KForm::constant(3, int(1));
        assert!(matches!(d_theta(&a, &theta, &h3()), Err(Error::Precondition(_))));
    }

    #[test]
    fn matrix_columns_match_forms() {
        let g = h3();
        let theta = KForm::monomial(3, &[0], frac(1, 2)).unwrap();
        let cols = differential_matrix(&g, 1, Some(&theta)).unwrap();
        let target = exterior_basis(3, 2);
        for (j, idx) in exterior_basis(3, 1).iter().enumerate() {
            let f = KForm::monomial(3, idx.as_slice(), int(1)).unwrap();
            let img = d_theta(&f, &theta, &g).unwrap();
            let mut rebuilt = KForm::zero(3, 2);
            for (r, v) in &cols[j] {
                rebuilt = rebuilt.add(&KForm::monomial(3, target[*r].as_slice(), v.clone()).unwrap()).unwrap();
            }
            assert_eq!(rebuilt, img);
        }
    }
}
