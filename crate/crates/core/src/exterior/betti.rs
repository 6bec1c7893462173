use std::fmt;

use rayon::prelude::*;

use super::algebra::LieAlgebra;
use super::differential::differential_matrix;
use super::form::KForm;
use super::linalg::SparseEchelon;
use crate::Result;

/// Betti numbers `β_0, …, β_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(pub Vec<u64>);

impl BettiVector {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ (−1)^k β_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn ranks(g: &LieAlgebra, theta: Option<&KForm>) -> Result<Vec<usize>> {
    // rank of d on Λ^k, k = 0..dim (d on the top degree is zero)
    (0..=g.dim())
        .into_par_iter()
        .map(|k| {
            let cols = differential_matrix(g, k, theta)?;
            let mut ech = SparseEchelon::new();
            for col in &cols {
                ech.insert(col);
            }
            Ok(ech.rank())
        })
        .collect()
}

fn betti_from_ranks(dim: usize, ranks: &[usize]) -> BettiVector {
    BettiVector(
        (0..=dim)
            .map(|k| {
                let prev = if k == 0 { 0 } else { ranks[k - 1] };
                binomial(dim, k) - ranks[k] as u64 - prev as u64
            })
            .collect(),
    )
}

/// `β_k = dim ker d_k − rank d_{k−1}` computed by exact sparse elimination,
/// in parallel over the degrees.
pub fn betti_direct(g: &LieAlgebra) -> Result<BettiVector> {
    g.require_jacobi()?;
    Ok(betti_from_ranks(g.dim(), &ranks(g, None)?))
}

/// Betti numbers of the complex `(Λ^• g*, d_θ)` for a closed 1-form `θ`.
pub fn adapted_betti_direct(g: &LieAlgebra, theta: &KForm) -> Result<BettiVector> {
    g.require_jacobi()?;
    Ok(betti_from_ranks(g.dim(), &ranks(g, Some(theta))?))
}
