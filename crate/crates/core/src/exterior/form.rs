use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{self, ExactScalar};
use crate::{Error, Result};

/// A strictly increasing list of basis indices (0-based).
///
/// Ordering is lexicographic, which fixes the serialization order of forms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Builds a multi-index, rejecting anything not strictly increasing.
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(format!(
                "multi-index {indices:?} is not strictly increasing"
            )));
        }
        Ok(MultiIndex(indices))
    }

    /// Sorts an arbitrary index list, returning the permutation sign, or
    /// `None` when an index repeats (the wedge vanishes).
    pub fn sorted_with_sign(mut indices: Vec<usize>) -> Option<(Self, bool)> {
        // insertion sort, counting transpositions
        let mut negative = false;
        for i in 1..indices.len() {
            let mut j = i;
            while j > 0 && indices[j - 1] > indices[j] {
                indices.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((MultiIndex(indices), negative))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
}

/// An alternating `degree`-form on a `dim`-dimensional Lie algebra, stored
/// sparsely in the dual basis `e^{i_1} ∧ … ∧ e^{i_k}`.
///
/// No zero coefficients are ever stored. Forms with `degree > dim` exist and
/// are identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<MultiIndex, ExactScalar>,
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        KForm {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 0-form `c`.
    pub fn constant(dim: usize, c: ExactScalar) -> Self {
        let mut f = KForm::zero(dim, 0);
        f.add_term(MultiIndex::default(), c);
        f
    }

    /// The monomial `c · e^{i_1} ∧ … ∧ e^{i_k}` for an arbitrary index order.
    pub fn monomial(dim: usize, indices: &[usize], c: ExactScalar) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= dim) {
            return Err(Error::IndexOutOfRange { index: bad, dim });
        }
        let mut f = KForm::zero(dim, indices.len());
        if let Some((idx, negative)) = MultiIndex::sorted_with_sign(indices.to_vec()) {
            f.add_term(idx, if negative { -c } else { c });
        }
        Ok(f)
    }

    /// Sum of monomials given as `(indices, coefficient)` pairs.
    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, ExactScalar)>,
    {
        let mut f = KForm::zero(dim, degree);
        for (indices, c) in terms {
            if indices.len() != degree {
                return Err(Error::Precondition(format!(
                    "term {indices:?} does not have degree {degree}"
                )));
            }
            f = f.add(&KForm::monomial(dim, &indices, c)?)?;
        }
        Ok(f)
    }

    /// The 1-form `Σ v_i e^i`.
    pub fn from_covector(v: &[ExactScalar]) -> Self {
        let mut f = KForm::zero(v.len(), 1);
        for (i, c) in v.iter().enumerate() {
            f.add_term(MultiIndex(vec![i]), c.clone());
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &ExactScalar)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of the sorted multi-index `indices` (zero if absent).
    pub fn coeff(&self, indices: &[usize]) -> ExactScalar {
        match MultiIndex::sorted_with_sign(indices.to_vec()) {
            Some((idx, negative)) => {
                let c = self.coeffs.get(&idx).cloned().unwrap_or_else(ExactScalar::zero);
                if negative {
                    -c
                } else {
                    c
                }
            }
            None => ExactScalar::zero(),
        }
    }

    /// Coefficients of a 1-form as a dense covector.
    pub fn to_covector(&self) -> Vec<ExactScalar> {
        debug_assert_eq!(self.degree, 1);
        (0..self.dim).map(|i| self.coeff(&[i])).collect()
    }

    pub(crate) fn add_term(&mut self, idx: MultiIndex, c: ExactScalar) {
        if c.is_zero() || self.degree > self.dim {
            return;
        }
        debug_assert_eq!(idx.len(), self.degree);
        let entry = self.coeffs.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &KForm) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.degree != other.degree {
            return Err(Error::Precondition(format!(
                "degree mismatch: {} vs {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &KForm) -> Result<KForm> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KForm) -> Result<KForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KForm {
        self.scale(&-ExactScalar::one())
    }

    pub fn scale(&self, c: &ExactScalar) -> KForm {
        let mut out = KForm::zero(self.dim, self.degree);
        if c.is_zero() {
            return out;
        }
        for (idx, v) in &self.coeffs {
            out.coeffs.insert(idx.clone(), v * c);
        }
        out
    }

    /// Relabels basis indices: `e^i` becomes `e^{perm[i]}`.
    pub fn relabel(&self, perm: &[usize]) -> Result<KForm> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: perm.len(),
            });
        }
        let mut out = KForm::zero(self.dim, self.degree);
        for (idx, c) in &self.coeffs {
            let mapped: Vec<usize> = idx.as_slice().iter().map(|&i| perm[i]).collect();
            out = out.add(&KForm::monomial(self.dim, &mapped, c.clone())?)?;
        }
        Ok(out)
    }

    /// Evaluates the form on `degree` vectors given in coordinates.
    ///
    /// Uses `(e^{i_1}∧…∧e^{i_k})(x_1,…,x_k) = det[x_s^{i_r}]`.
    pub fn evaluate(&self, vectors: &[Vec<ExactScalar>]) -> Result<ExactScalar> {
        if vectors.len() != self.degree {
            return Err(Error::Precondition(format!(
                "a {}-form needs {} arguments, got {}",
                self.degree,
                self.degree,
                vectors.len()
            )));
        }
        for v in vectors {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut total = ExactScalar::zero();
        for (idx, c) in &self.coeffs {
            let m: Vec<Vec<ExactScalar>> = idx
                .as_slice()
                .iter()
                .map(|&i| vectors.iter().map(|v| v[i].clone()).collect())
                .collect();
            total += c * super::linalg::determinant(&m);
        }
        Ok(total)
    }
}

impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let basis: Vec<String> = idx.as_slice().iter().map(|i| format!("e{}", i + 1)).collect();
            if basis.is_empty() {
                write!(f, "{}", scalar::format(c))?;
            } else {
                write!(f, "({})·{}", scalar::format(c), basis.join("∧"))?;
            }
        }
        Ok(())
    }
}

/// Exterior product, normalized: indices sorted with permutation sign,
/// repeated indices and zero coefficients dropped.
pub fn wedge(a: &KForm, b: &KForm) -> Result<KForm> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    let mut out = KForm::zero(a.dim, a.degree + b.degree);
    for (ia, ca) in &a.coeffs {
        for (ib, cb) in &b.coeffs {
            let mut joined = ia.as_slice().to_vec();
            joined.extend_from_slice(ib.as_slice());
            if let Some((idx, negative)) = MultiIndex::sorted_with_sign(joined) {
                let c = ca * cb;
                out.add_term(idx, if negative { -c } else { c });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn e(dim: usize, idx: &[usize]) -> KForm {
        KForm::monomial(dim, idx, int(1)).unwrap()
    }

    #[test]
    fn sort_with_parity() {
        let (idx, neg) = MultiIndex::sorted_with_sign(vec![2, 0, 1]).unwrap();
        assert_eq!(idx.as_slice(), &[0, 1, 2]);
        assert!(!neg);
        let (_, neg) = MultiIndex::sorted_with_sign(vec![1, 0]).unwrap();
        assert!(neg);
        assert!(MultiIndex::sorted_with_sign(vec![1, 3, 1]).is_none());
        assert!(MultiIndex::new(vec![0, 0]).is_err());
    }

    #[test]
    fn wedge_anticommutes_on_one_forms() {
        let e1 = e(2, &[0]);
        let e2 = e(2, &[1]);
        assert_eq!(wedge(&e1, &e2).unwrap(), wedge(&e2, &e1).unwrap().neg());
        assert!(wedge(&e1, &e1).unwrap().is_zero());
    }

    #[test]
    fn square_of_standard_symplectic_form() {
        // f1∧f2 + u1∧v1 squared is 2 f1∧f2∧u1∧v1
        let w = e(4, &[0, 1]).add(&e(4, &[2, 3])).unwrap();
        let sq = wedge(&w, &w).unwrap();
        assert_eq!(sq, KForm::monomial(4, &[0, 1, 2, 3], int(2)).unwrap());
    }

    #[test]
    fn wedge_matches_r4_lambda_check() {
        let lam = frac(3, 5);
        let theta = KForm::monomial(4, &[0], -int(2) * &lam).unwrap();
        let w = e(4, &[0, 1]).sub(&e(4, &[2, 3])).unwrap();
        let expected = KForm::monomial(4, &[0, 2, 3], int(2) * &lam).unwrap();
        assert_eq!(wedge(&theta, &w).unwrap(), expected);
    }

    #[test]
    fn degree_beyond_dimension_is_zero() {
        let w = e(3, &[0, 1]);
        let p = wedge(&w, &w).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), 4);
        let big = wedge(&p, &e(3, &[2])).unwrap();
        assert!(big.is_zero());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(
            wedge(&e(3, &[0]), &e(4, &[0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn evaluation_is_determinant() {
        let w = e(3, &[0, 1]);
        let x = vec![int(1), int(2), int(0)];
        let y = vec![int(3), int(4), int(5)];
        assert_eq!(w.evaluate(&[x.clone(), y.clone()]).unwrap(), int(-2));
        assert_eq!(w.evaluate(&[y, x]).unwrap(), int(2));
    }

    #[test]
    fn relabel_tracks_sign() {
        let w = e(3, &[0, 1]);
        let r = w.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(r, e(3, &[0, 1]).neg());
    }
}
