use num_traits::Zero;

use crate::poly::{invariant_factors, Poly};
use crate::scalar::ExactScalar;
use crate::{Error, Result};

fn scaled(m: &[Vec<ExactScalar>], c: &ExactScalar) -> Vec<Vec<ExactScalar>> {
    m.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

/// Whether `M1` and `c·M2` are similar over ℚ, decided by comparing the
/// invariant factors of `xI − M1` and `xI − c·M2`.
pub fn similar_up_to_scale(
    m1: &[Vec<ExactScalar>],
    m2: &[Vec<ExactScalar>],
    c: &ExactScalar,
) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::Precondition("scale must be nonzero".into()));
    }
    if m1.len() != m2.len() {
        return Err(Error::DimensionMismatch {
            expected: m1.len(),
            found: m2.len(),
        });
    }
    for r in m1.iter().chain(m2) {
        if r.len() != m1.len() {
            return Err(Error::DimensionMismatch {
                expected: m1.len(),
                found: r.len(),
            });
        }
    }
    Ok(invariant_factors(m1) == invariant_factors(&scaled(m2, c)))
}

/// Rational scales `c` for which `M1 ~ c·M2`, among the candidates
/// `±1`, `tr M1 / tr M2` and all ratios of rational eigenvalues.
/// Sorted and deduplicated. Irrational scales are never found.
pub fn candidate_scales(m1: &[Vec<ExactScalar>], m2: &[Vec<ExactScalar>]) -> Result<Vec<ExactScalar>> {
    let one = ExactScalar::from_integer(1.into());
    let mut cands = vec![one.clone(), -one];
    let tr = |m: &[Vec<ExactScalar>]| -> ExactScalar { (0..m.len()).map(|i| m[i][i].clone()).sum() };
    let (t1, t2) = (tr(m1), tr(m2));
    if !t2.is_zero() && !t1.is_zero() {
        cands.push(t1 / t2);
    }
    let r1 = Poly::char_poly(m1).rational_roots();
    let r2 = Poly::char_poly(m2).rational_roots();
    for a in r1.iter().filter(|x| !x.is_zero()) {
        for b in r2.iter().filter(|x| !x.is_zero()) {
            cands.push(a / b);
        }
    }
    cands.sort();
    cands.dedup();
    let mut out = Vec::new();
    for c in cands {
        if similar_up_to_scale(m1, m2, &c)? {
            out.push(c);
        }
    }
    Ok(out)
}
