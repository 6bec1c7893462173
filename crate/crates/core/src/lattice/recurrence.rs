use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::Poly;
use crate::{Error, Result};

/// `t_m = n·arccosh(m/2)`, so that `ρ = e^{t_m/2n}` has `ρ² + ρ⁻² = m`.
pub fn t_parameter(n: i64, m: i64) -> Result<f64> {
    if m <= 2 {
        return Err(Error::Precondition(format!("m = {m} must exceed 2")));
    }
    if n < 1 {
        return Err(Error::Precondition(format!("n = {n} must be positive")));
    }
    Ok(n as f64 * (m as f64 / 2.0).acosh())
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceData {
    pub m: i64,
    pub n: i64,
    pub t_m: f64,
    pub rho: f64,
    /// `a_0 = 2`, `a_1 = m`, `a_{k+1} = m a_k − a_{k−1}`, up to `a_n`.
    pub a: Vec<BigInt>,
    /// `max_k |a_k − (ρ^{2k} + ρ^{−2k})| / a_k`.
    pub max_relative_residual: f64,
}

pub fn a_sequence(m: i64, n: i64) -> Result<RecurrenceData> {
    let t_m = t_parameter(n, m)?;
    let rho = (t_m / (2.0 * n as f64)).exp();
    let mut a = vec![BigInt::from(2), BigInt::from(m)];
    while a.len() <= n as usize {
        let k = a.len();
        a.push(m * &a[k - 1] - &a[k - 2]);
    }
    a.truncate(n as usize + 1);
    let max_relative_residual = a
        .iter()
        .enumerate()
        .map(|(k, ak)| {
            let x = ak.to_f64().unwrap_or(f64::INFINITY);
            let r2k = rho.powi(2 * k as i32);
            (x - (r2k + 1.0 / r2k)).abs() / x.abs()
        })
        .fold(0.0, f64::max);
    Ok(RecurrenceData {
        m,
        n,
        t_m,
        rho,
        a,
        max_relative_residual,
    })
}

/// `(x − 1)·∏_{k=1..n} (x² − a_k x + 1)`, highest degree first.
pub fn char_poly_integer(n: i64, m: i64) -> Result<Vec<BigInt>> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    let data = a_sequence(m, n)?;
    // ascending while multiplying
    let mut p = vec![BigInt::from(-1), BigInt::one()];
    for ak in &data.a[1..] {
        let q = [BigInt::one(), -ak.clone(), BigInt::one()];
        let mut next = vec![BigInt::zero(); p.len() + 2];
        for (i, x) in p.iter().enumerate() {
            for (j, y) in q.iter().enumerate() {
                next[i + j] += x * y;
            }
        }
        p = next;
    }
    p.reverse();
    Ok(p)
}

/// Companion matrix of a monic integer polynomial (highest degree first)
/// with constant term `−1`: ones on the subdiagonal, last column
/// `(−c_0, …, −c_{N−1})`.
pub fn companion_matrix(poly: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    if poly.len() < 2 || !poly[0].is_one() {
        return Err(Error::Precondition("polynomial must be monic of degree ≥ 1".into()));
    }
    if *poly.last().unwrap() != BigInt::from(-1) {
        return Err(Error::Precondition("constant term must be −1".into()));
    }
    let n = poly.len() - 1;
    let mut c = vec![vec![BigInt::zero(); n]; n];
    for i in 1..n {
        c[i][i - 1] = BigInt::one();
    }
    for (i, row) in c.iter_mut().enumerate() {
        // coefficient of x^i sits at position n − i
        row[n - 1] = -poly[n - i].clone();
    }
    Ok(c)
}

/// Bareiss determinant of an integer matrix.
pub fn integer_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exact characteristic polynomial of an integer matrix, highest degree
/// first.
pub fn integer_char_poly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let q: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let p = Poly::char_poly(&q);
    p.coeffs()
        .iter()
        .rev()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn t_values() {
        assert!((t_parameter(2, 3).unwrap() - 2.0 * (1.5 + 1.25f64.sqrt()).ln()).abs() < 1e-14);
        assert!((t_parameter(2, 3).unwrap() - 1.924_847_300_2).abs() < 1e-9);
        assert!(t_parameter(2, 2).is_err());
        let r = a_sequence(3, 2).unwrap();
        assert!((r.rho.powi(2) + r.rho.powi(-2) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn recurrence() {
        let r = a_sequence(3, 3).unwrap();
        assert_eq!(r.a, ints(&[2, 3, 7, 18]));
        assert!(r.max_relative_residual <= 1e-9);
    }

    #[test]
    fn expansion_two_three() {
        assert_eq!(char_poly_integer(2, 3).unwrap(), ints(&[1, -11, 33, -33, 11, -1]));
    }

    #[test]
    fn companion_roundtrip() {
        let p = char_poly_integer(2, 3).unwrap();
        let c = companion_matrix(&p).unwrap();
        assert_eq!(integer_determinant(&c), BigInt::one());
        assert_eq!(integer_char_poly(&c), p);
        assert!(companion_matrix(&ints(&[2, 0, -1])).is_err());
        assert!(companion_matrix(&ints(&[1, 0, 1])).is_err());
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![ints(&[0, 1, 2]), ints(&[3, 0, 1]), ints(&[4, 5, 0])];
        // 0·(0−5) − 1·(0−4) + 2·(15−0) = 34
        assert_eq!(integer_determinant(&m), BigInt::from(34));
    }
}
