use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::ExactScalar;
use crate::{Error, Result};

/// A finite dimensional Lie algebra over ℚ given by structure constants
/// `[e_i, e_j] = Σ_k c^k_{ij} e_k` (0-based indices).
///
/// Only pairs `i < j` are stored; antisymmetry is implicit. Jacobi is not
/// enforced at construction, see [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    brackets: BTreeMap<(usize, usize), BTreeMap<usize, ExactScalar>>,
    labels: Option<Vec<String>>,
}

/// Outcome of [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub jacobi_ok: bool,
    /// First basis triple `i < j < k` on which Jacobi fails.
    pub jacobi_witness: Option<(usize, usize, usize)>,
    pub unimodular: bool,
    /// `tr(ad_{e_i})` for every basis element.
    pub trace_per_basis: Vec<ExactScalar>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            brackets: BTreeMap::new(),
            labels: None,
        }
    }

    /// Builds an algebra from entries `(i, j, k, c)` meaning `c^k_{ij} = c`.
    /// Entries with `i > j` are stored with the sign flipped; repeated
    /// entries accumulate.
    pub fn from_structure_constants<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, ExactScalar)>,
    {
        let mut g = LieAlgebra::abelian(dim);
        for (i, j, k, c) in entries {
            g.add_bracket_term(i, j, k, c)?;
        }
        Ok(g)
    }

    /// Adds `c·e_k` to `[e_i, e_j]`.
    pub fn add_bracket_term(&mut self, i: usize, j: usize, k: usize, c: ExactScalar) -> Result<()> {
        for idx in [i, j, k] {
            if idx >= self.dim {
                return Err(Error::IndexOutOfRange { index: idx, dim: self.dim });
            }
        }
        if i == j {
            if c.is_zero() {
                return Ok(());
            }
            return Err(Error::Precondition(format!(
                "[e{i}, e{i}] must vanish"
            )));
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        let entry = self.brackets.entry(key).or_default();
        let slot = entry.entry(k).or_insert_with(ExactScalar::zero);
        *slot += c;
        if slot.is_zero() {
            entry.remove(&k);
        }
        if entry.is_empty() {
            self.brackets.remove(&key);
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Nonzero brackets `(i, j) ↦ {k ↦ c^k_{ij}}` with `i < j`.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), BTreeMap<usize, ExactScalar>> {
        &self.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> ExactScalar {
        let (key, negative) = if i < j { ((i, j), false) } else { ((j, i), true) };
        let c = self
            .brackets
            .get(&key)
            .and_then(|m| m.get(&k))
            .cloned()
            .unwrap_or_else(ExactScalar::zero);
        if negative {
            -c
        } else {
            c
        }
    }

    /// `[e_i, e_j]` as a dense coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<ExactScalar> {
        let mut out = vec![ExactScalar::zero(); self.dim];
        if i == j {
            return out;
        }
        let (key, negative) = if i < j { ((i, j), false) } else { ((j, i), true) };
        if let Some(m) = self.brackets.get(&key) {
            for (&k, c) in m {
                out[k] = if negative { -c.clone() } else { c.clone() };
            }
        }
        out
    }

    /// Bracket of two vectors given in coordinates.
    pub fn bracket(&self, x: &[ExactScalar], y: &[ExactScalar]) -> Vec<ExactScalar> {
        let mut out = vec![ExactScalar::zero(); self.dim];
        for (&(i, j), m) in &self.brackets {
            // [x, y] picks up (x_i y_j - x_j y_i) [e_i, e_j]
            let w = &x[i] * &y[j] - &x[j] * &y[i];
            if w.is_zero() {
                continue;
            }
            for (&k, c) in m {
                out[k] += &w * c;
            }
        }
        out
    }

    /// Matrix of `ad_x` in the basis: column `j` is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[ExactScalar]) -> Vec<Vec<ExactScalar>> {
        let mut m = vec![vec![ExactScalar::zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            let mut e = vec![ExactScalar::zero(); self.dim];
            e[j] = num_traits::One::one();
            let col = self.bracket(x, &e);
            for (i, v) in col.into_iter().enumerate() {
                m[i][j] = v;
            }
        }
        m
    }

    pub fn trace_ad(&self, i: usize) -> ExactScalar {
        (0..self.dim).map(|k| self.structure_constant(k, i, k)).sum()
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<ExactScalar> {
        let e = |a: usize| {
            let mut v = vec![ExactScalar::zero(); self.dim];
            v[a] = num_traits::One::one();
            v
        };
        let mut out = vec![ExactScalar::zero(); self.dim];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (o, t) in out.iter_mut().zip(self.bracket(&self.bracket_basis(a, b), &e(c))) {
                *o += t;
            }
        }
        out
    }

    /// Checks Jacobi on all basis triples and computes `tr(ad_{e_i})`.
    pub fn validate(&self) -> ValidationReport {
        let mut witness = None;
        'outer: for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    if self.jacobiator(i, j, k).iter().any(|c| !c.is_zero()) {
                        witness = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        let traces: Vec<ExactScalar> = (0..self.dim).map(|i| self.trace_ad(i)).collect();
        ValidationReport {
            jacobi_ok: witness.is_none(),
            jacobi_witness: witness,
            unimodular: traces.iter().all(Zero::is_zero),
            trace_per_basis: traces,
        }
    }

    /// Errors with the witnessing triple when Jacobi fails.
    pub fn require_jacobi(&self) -> Result<()> {
        match self.validate().jacobi_witness {
            Some((i, j, k)) => Err(Error::Jacobi(i, j, k)),
            None => Ok(()),
        }
    }
}
