//! Exact linear algebra over the rationals.
//!
//! Dense routines use fraction-free (Bareiss) elimination on integer rows
//! obtained by clearing denominators row by row; row scaling changes neither
//! the rank nor the null space. The sparse rank routine used for cochain
//! complexes keeps integer rows primitive (content divided out) instead.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactScalar;
use crate::{Error, Result};

fn clear_denominators(row: &[ExactScalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn check_shape(rows: &[Vec<ExactScalar>], ncols: usize) -> Result<()> {
    for r in rows {
        if r.len() != ncols {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: r.len(),
            });
        }
    }
    Ok(())
}

/// Integer row echelon form produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn bareiss_echelon(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                // exact by Sylvester's identity
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Rank and a basis of the right null space `{x : A x = 0}` of a rational
/// matrix given by rows with `ncols` columns.
pub fn rank_and_kernel(
    rows: &[Vec<ExactScalar>],
    ncols: usize,
) -> Result<(usize, Vec<Vec<ExactScalar>>)> {
    check_shape(rows, ncols)?;
    let ech = bareiss_echelon(rows.iter().map(|r| clear_denominators(r)).collect(), ncols);
    let rank = ech.pivots.len();
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut x = vec![ExactScalar::zero(); ncols];
            x[f] = ExactScalar::one();
            back_substitute(&ech, &mut x);
            x
        })
        .collect();
    Ok((rank, kernel))
}

pub fn rank(rows: &[Vec<ExactScalar>], ncols: usize) -> Result<usize> {
    check_shape(rows, ncols)?;
    Ok(bareiss_echelon(rows.iter().map(|r| clear_denominators(r)).collect(), ncols)
        .pivots
        .len())
}

/// Fills the pivot coordinates of `x` so that every echelon row vanishes,
/// given the free coordinates.
fn back_substitute(ech: &Echelon, x: &mut [ExactScalar]) {
    for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
        let mut s = ExactScalar::zero();
        for (j, a) in row.iter().enumerate().skip(p + 1) {
            if !a.is_zero() && !x[j].is_zero() {
                s += &x[j] * BigRational::from_integer(a.clone());
            }
        }
        x[p] = -s / BigRational::from_integer(row[p].clone());
    }
}

/// One solution of `A x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(rows: &[Vec<ExactScalar>], rhs: &[ExactScalar], ncols: usize) -> Result<Option<Vec<ExactScalar>>> {
    check_shape(rows, ncols)?;
    if rows.len() != rhs.len() {
        return Err(Error::DimensionMismatch {
            expected: rows.len(),
            found: rhs.len(),
        });
    }
    let augmented: Vec<Vec<BigInt>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut full = r.clone();
            full.push(b.clone());
            clear_denominators(&full)
        })
        .collect();
    let ech = bareiss_echelon(augmented, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return Ok(None);
    }
    // treat the augmented column as a free variable fixed at -1
    let mut x = vec![ExactScalar::zero(); ncols + 1];
    x[ncols] = -ExactScalar::one();
    back_substitute(&ech, &mut x);
    x.truncate(ncols);
    Ok(Some(x))
}

/// Reduced row echelon form over ℚ with zero rows dropped, together with
/// the pivot columns.
pub fn rref(rows: &[Vec<ExactScalar>], ncols: usize) -> Result<(Vec<Vec<ExactScalar>>, Vec<usize>)> {
    check_shape(rows, ncols)?;
    let mut a = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    Ok((a, pivots))
}

/// Determinant by rational Gaussian elimination (small matrices only).
pub fn determinant(m: &[Vec<ExactScalar>]) -> ExactScalar {
    let n = m.len();
    let mut a: Vec<Vec<ExactScalar>> = m.to_vec();
    let mut det = ExactScalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return ExactScalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Exact positive-definiteness test for a symmetric matrix: elimination
/// without pivoting must meet only positive pivots.
pub fn is_positive_definite(m: &[Vec<ExactScalar>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<ExactScalar>> = m.to_vec();
    for c in 0..n {
        if !a[c][c].is_positive() {
            return false;
        }
        let pivot = a[c][c].clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

pub fn mat_mul(a: &[Vec<ExactScalar>], b: &[Vec<ExactScalar>]) -> Vec<Vec<ExactScalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(ExactScalar::zero(), |acc, k| {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            acc + &row[k] * &b[k][j]
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<ExactScalar>], x: &[ExactScalar]) -> Vec<ExactScalar> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<ExactScalar>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ExactScalar::one() } else { ExactScalar::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<ExactScalar>]) -> Vec<Vec<ExactScalar>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Incremental sparse row echelon form over the integers.
///
/// Rows are kept primitive (gcd of entries is one) which bounds coefficient
/// growth for the very sparse coboundary matrices of Lie algebras.
#[derive(Default)]
pub struct SparseEchelon {
    pivots: BTreeMap<usize, Vec<(usize, BigInt)>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a rational row given as `(column, value)` pairs; returns
    /// whether the rank increased.
    pub fn insert(&mut self, row: &[(usize, ExactScalar)]) -> bool {
        let mut entries: Vec<(usize, ExactScalar)> =
            row.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
        entries.sort_by_key(|(c, _)| *c);
        let lcm = entries
            .iter()
            .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
        let mut current: Vec<(usize, BigInt)> = entries
            .into_iter()
            .map(|(c, x)| (c, x.numer() * (&lcm / x.denom())))
            .collect();
        make_primitive(&mut current);
        loop {
            let Some((lead, lead_val)) = current.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    self.pivots.insert(lead, current);
                    return true;
                }
                Some(pivot) => {
                    let p = pivot[0].1.clone();
                    current = combine(&current, &p, pivot, &lead_val);
                    make_primitive(&mut current);
                }
            }
        }
    }
}

/// `a·x − b·y` on sorted sparse rows.
fn combine(x: &[(usize, BigInt)], a: &BigInt, y: &[(usize, BigInt)], b: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if g > BigInt::one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}
