use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::certificate::polish_roots;
use crate::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct RaicesViolation {
    /// `(m_1, …, m_{2n})`.
    pub m: Vec<i64>,
    pub x0: f64,
    pub moduli: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RaicesReport {
    pub n: usize,
    pub bound: i64,
    pub tol: f64,
    pub polynomials: usize,
    /// Polynomials with a repeated real root, left out of the hypothesis set.
    pub repeated_real: usize,
    /// Polynomials for which some simple real root `x₀` leaves the other
    /// `2n` roots on a common circle.
    pub hypothesis: usize,
    pub violations: Vec<RaicesViolation>,
}

/// Integer coefficients of `x^{2n+1} − m_{2n}x^{2n} + m_{2n−1}x^{2n−1} − … + m_1x − 1`,
/// lowest degree first: the coefficient of `x^j` is `(−1)^{2n+1−j} m_j`.
fn coefficients(m: &[i64]) -> Vec<i64> {
    let big_n = m.len() + 1;
    let mut c = Vec::with_capacity(big_n + 1);
    c.push(-1);
    for (j, &mj) in m.iter().enumerate() {
        let j = j + 1;
        c.push(if (big_n - j) % 2 == 0 { mj } else { -mj });
    }
    c.push(1);
    c
}

fn roots(c: &[i64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let comp = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -(c[i] as f64)
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let mut r: Vec<Complex64> = comp.complex_eigenvalues().iter().copied().collect();
    let desc: Vec<f64> = c.iter().rev().map(|&x| x as f64).collect();
    polish_roots(&desc, &mut r);
    r
}

enum Outcome {
    RepeatedReal,
    Outside,
    Holds,
    Violates(RaicesViolation),
}

fn examine(m: Vec<i64>, tol: f64) -> Outcome {
    let c = coefficients(&m);
    let p = Poly::from_ints(&c);
    if p.gcd(&p.derivative()).count_real_roots() > 0 {
        return Outcome::RepeatedReal;
    }
    let real_count = p.count_real_roots();
    let mut r = roots(&c);
    r.sort_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
    for z in r.iter_mut().take(real_count) {
        *z = Complex64::new(z.re, 0.0);
    }
    let mut hypothesis = false;
    for i in 0..real_count {
        let x0 = r[i].re;
        let mut moduli: Vec<f64> = r
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, z)| z.norm())
            .collect();
        moduli.sort_by(f64::total_cmp);
        let (lo, hi) = (moduli[0], moduli[moduli.len() - 1]);
        if hi - lo > tol * hi {
            continue;
        }
        hypothesis = true;
        if (x0 - 1.0).abs() > tol || moduli.iter().any(|r| (r - 1.0).abs() > tol) {
            return Outcome::Violates(RaicesViolation { m, x0, moduli });
        }
    }
    if hypothesis {
        Outcome::Holds
    } else {
        Outcome::Outside
    }
}

/// Exhaustive check of the root lemma over all `m_j ∈ [−bound, bound]`.
pub fn raices_oracle(n: usize, bound: i64, tol: f64) -> Result<RaicesReport> {
    if n < 1 || bound < 0 || !(tol > 0.0) {
        return Err(Error::Precondition("need n ≥ 1, bound ≥ 0, tol > 0".into()));
    }
    let width = (2 * bound + 1) as u64;
    let count = width
        .checked_pow(2 * n as u32)
        .filter(|&c| c <= 1 << 32)
        .ok_or_else(|| Error::Precondition("scan too large".into()))?;
    let outcomes: Vec<Outcome> = (0..count)
        .into_par_iter()
        .map(|mut idx| {
            let m: Vec<i64> = (0..2 * n)
                .map(|_| {
                    let d = (idx % width) as i64 - bound;
                    idx /= width;
                    d
                })
                .collect();
            examine(m, tol)
        })
        .collect();
    let mut report = RaicesReport {
        n,
        bound,
        tol,
        polynomials: count as usize,
        repeated_real: 0,
        hypothesis: 0,
        violations: Vec::new(),
    };
    for o in outcomes {
        match o {
            Outcome::RepeatedReal => report.repeated_real += 1,
            Outcome::Outside => {}
            Outcome::Holds => report.hypothesis += 1,
            Outcome::Violates(v) => {
                report.hypothesis += 1;
                report.violations.push(v);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_convention() {
        // x⁵ − m₄x⁴ + m₃x³ − m₂x² + m₁x − 1
        assert_eq!(coefficients(&[1, 2, 3, 4]), vec![-1, 1, -2, 3, -4, 1]);
    }

    #[test]
    fn roots_of_unity() {
        match examine(vec![0, 0, 0, 0], 1e-6) {
            Outcome::Holds => {}
            _ => panic!("x⁵ − 1 satisfies the hypothesis"),
        }
    }

    #[test]
    fn distinct_real_moduli_rejected() {
        // (x − 1)(x² − 3x + 1)(x² − 7x + 1): five real roots of distinct modulus
        match examine(vec![11, 33, 33, 11], 1e-6) {
            Outcome::Outside => {}
            _ => panic!("hypothesis must fail"),
        }
    }

    #[test]
    fn repeated_real_excluded() {
        // (x − 1)³(x² + x + 1) = x⁵ − 2x⁴ + x³ − x² + 2x − 1
        match examine(vec![2, 1, 1, 2], 1e-6) {
            Outcome::RepeatedReal => {}
            _ => panic!("repeated root must be excluded"),
        }
    }

    #[test]
    fn small_scan_clean() {
        let r = raices_oracle(2, 1, 1e-6).unwrap();
        assert_eq!(r.polynomials, 81);
        assert!(r.violations.is_empty());
        assert!(r.hypothesis > 0);
    }
}
