//! Almost abelian Lie algebras `ℝf₁ ⋉_M ℝ^d` and the named families built
//! from them.
//!
//! Basis convention: index 0 is `f₁`, indices `1..=d` span the abelian ideal,
//! and `[f₁, e_j] = Σ_i M_{ij} e_i` (column convention).

mod families;
mod named;
mod similarity;

pub use families::{g_b, lck_family, lcs_family, m6_family, m6_matrix, FamilyStructure};
pub use named::{named_4d, NAMED_4D_LABELS};
pub use similarity::{candidate_scales, similar_up_to_scale};

use num_traits::{One, Zero};

use crate::exterior::{KForm, LieAlgebra};
use crate::scalar::ExactScalar;
use crate::{Error, Result};

/// Matrix of `ad_{f₁}` restricted to a codimension one abelian ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostAbelianSpec {
    pub m: Vec<Vec<ExactScalar>>,
    pub label: Option<String>,
}

impl AlmostAbelianSpec {
    pub fn new(m: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let d = m.len();
        if let Some(row) = m.iter().find(|r| r.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: row.len(),
            });
        }
        Ok(AlmostAbelianSpec { m, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Block form `(μ | wᵗ ; 0 | A)`.
    pub fn block(mu: ExactScalar, w: &[ExactScalar], a: &[Vec<ExactScalar>]) -> Result<Self> {
        if w.len() != a.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: w.len(),
            });
        }
        let d = a.len() + 1;
        let mut m = vec![vec![ExactScalar::zero(); d]; d];
        m[0][0] = mu;
        for (j, wj) in w.iter().enumerate() {
            m[0][j + 1] = wj.clone();
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != a.len() {
                return Err(Error::DimensionMismatch {
                    expected: a.len(),
                    found: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                m[i + 1][j + 1] = v.clone();
            }
        }
        AlmostAbelianSpec::new(m)
    }

    /// Dimension of the ideal.
    pub fn d(&self) -> usize {
        self.m.len()
    }

    pub fn trace(&self) -> ExactScalar {
        (0..self.d()).map(|i| self.m[i][i].clone()).sum()
    }

    /// Builds the Lie algebra of dimension `d + 1`.
    pub fn build(&self) -> LieAlgebra {
        let d = self.d();
        let mut g = LieAlgebra::abelian(d + 1);
        for j in 0..d {
            for i in 0..d {
                if !self.m[i][j].is_zero() {
                    g.add_bracket_term(0, j + 1, i + 1, self.m[i][j].clone())
                        .expect("indices in range");
                }
            }
        }
        let labels = std::iter::once("f1".to_string())
            .chain((1..=d).map(|i| format!("e{i}")))
            .collect();
        g.with_labels(labels).expect("label count matches")
    }
}

pub fn build_almost_abelian(spec: &AlmostAbelianSpec) -> LieAlgebra {
    spec.build()
}

/// Almost complex structure with a fundamental 2-form and a Lee form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianData {
    /// Column convention: column `j` is `J e_j`.
    pub j: Vec<Vec<ExactScalar>>,
    pub omega: KForm,
    pub theta: KForm,
}

impl HermitianData {
    pub fn j_squared_is_minus_identity(&self) -> bool {
        let sq = crate::exterior::linalg::mat_mul(&self.j, &self.j);
        sq.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(k, v)| {
                if i == k {
                    *v == -ExactScalar::one()
                } else {
                    v.is_zero()
                }
            })
        })
    }
}
