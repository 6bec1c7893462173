use std::f64::consts::PI;

use nalgebra::Matrix3;
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::{Error, Result};

/// `Δ_{m,n} = −27 − 4m³ + 18mn + m²n² − 4n³`, the discriminant of
/// `f(x) = x³ − mx² + nx − 1`.
pub fn discriminant(m: i64, n: i64) -> BigInt {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    BigInt::from(-27) - 4 * &m * &m * &m + 18 * &m * &n + &m * &m * &n * &n - 4 * &n * &n * &n
}

/// `Δ < 0`: one real root and a complex conjugate pair.
pub fn in_sigma(m: i64, n: i64) -> bool {
    discriminant(m, n) < BigInt::from(0)
}

/// `Σ` minus the three pairs where the real root is `c = 1`.
pub fn in_sigma_prime(m: i64, n: i64) -> bool {
    in_sigma(m, n) && !excluded(m, n)
}

fn excluded(m: i64, n: i64) -> bool {
    m == n && (0..=2).contains(&m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaPoint {
    pub m: i64,
    pub n: i64,
    pub in_sigma_prime: bool,
}

/// All `(m, n)` with `|m|, |n| ≤ bound` and `Δ < 0`, sorted.
pub fn sigma_region(bound: i64) -> Vec<SigmaPoint> {
    let mut out = Vec::new();
    for m in -bound..=bound {
        for n in -bound..=bound {
            if in_sigma(m, n) {
                out.push(SigmaPoint {
                    m,
                    n,
                    in_sigma_prime: !excluded(m, n),
                });
            }
        }
    }
    out
}

/// Roots of `x³ − mx² + nx − 1` for `Δ < 0`: real `c` and `α, ᾱ` with
/// `Im α > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicRootData {
    pub m: i64,
    pub n: i64,
    pub c: f64,
    pub alpha_re: f64,
    pub alpha_im: f64,
    /// Principal argument of `α`, in `(0, π)`.
    pub phi: f64,
    /// `|f(c)|`.
    pub residual_real: f64,
    /// `|f(α)|`.
    pub residual_complex: f64,
    /// `|c·|α|² − 1|`.
    pub residual_product: f64,
    /// `|c + 2 Re α − m| / max(1, |m|)`.
    pub residual_sum: f64,
}

fn f(m: f64, n: f64, x: f64) -> f64 {
    ((x - m) * x + n) * x - 1.0
}

fn newton_real(m: f64, n: f64, mut x: f64) -> f64 {
    for _ in 0..100 {
        let d = (3.0 * x - 2.0 * m) * x + n;
        if d == 0.0 {
            break;
        }
        let step = f(m, n, x) / d;
        x -= step;
        if step.abs() <= 1e-17 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

fn newton_complex(m: f64, n: f64, mut z: Complex64) -> Complex64 {
    for _ in 0..100 {
        let fz = ((z - m) * z + n) * z - 1.0;
        let d = (3.0 * z - 2.0 * m) * z + n;
        if d.norm() == 0.0 {
            break;
        }
        let step = fz / d;
        z -= step;
        if step.norm() <= 1e-17 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Cardano initial value for the real root, polished by Newton; the
/// complex pair follows from Vieta and is polished too.
pub fn cubic_roots(m: i64, n: i64) -> Result<CubicRootData> {
    if !in_sigma(m, n) {
        return Err(Error::Precondition(format!(
            "discriminant of ({m}, {n}) is not negative"
        )));
    }
    let (mf, nf) = (m as f64, n as f64);
    // x = y + m/3 gives y³ + py + q
    let p = nf - mf * mf / 3.0;
    let q = -2.0 * mf.powi(3) / 27.0 + mf * nf / 3.0 - 1.0;
    let s = (q * q / 4.0 + p.powi(3) / 27.0).max(0.0).sqrt();
    let y = (-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt();
    let c = newton_real(mf, nf, y + mf / 3.0);
    let re = (mf - c) / 2.0;
    let im = (1.0 / c - re * re).max(0.0).sqrt();
    let alpha = newton_complex(mf, nf, Complex64::new(re, im));
    let alpha = if alpha.im < 0.0 { alpha.conj() } else { alpha };
    let fa = ((alpha - mf) * alpha + nf) * alpha - 1.0;
    Ok(CubicRootData {
        m,
        n,
        c,
        alpha_re: alpha.re,
        alpha_im: alpha.im,
        phi: alpha.im.atan2(alpha.re),
        residual_real: f(mf, nf, c).abs(),
        residual_complex: fa.norm(),
        residual_product: (c * alpha.norm_sqr() - 1.0).abs(),
        residual_sum: (c + 2.0 * alpha.re - mf).abs() / mf.abs().max(1.0),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BValue {
    pub k: i64,
    /// `h_k = (φ + 2kπ) / log c`.
    pub h: f64,
    pub residual: f64,
}

/// Max absolute deviation of the characteristic polynomial of `exp(t₀ M_b)`,
/// `M_b = diag(1 | [[−½, −b], [b, −½]])`, `t₀ = log c`, from
/// `x³ − mx² + nx − 1`.
pub fn self_consistency_residual(m: i64, n: i64, c: f64, b: f64) -> f64 {
    let t0 = c.ln();
    let mb = Matrix3::new(1.0, 0.0, 0.0, 0.0, -0.5, -b, 0.0, b, -0.5) * t0;
    let e = mb.exp();
    let trace = e.trace();
    let minors = e[(0, 0)] * e[(1, 1)] - e[(0, 1)] * e[(1, 0)] + e[(0, 0)] * e[(2, 2)] - e[(0, 2)] * e[(2, 0)]
        + e[(1, 1)] * e[(2, 2)]
        - e[(1, 2)] * e[(2, 1)];
    let det = e.determinant();
    [(trace - m as f64).abs(), (minors - n as f64).abs(), (det - 1.0).abs()]
    .into_iter()
    .fold(0.0, f64::max)
}

/// The parameters `h_k` for `k` in `ks`, each with its self-consistency
/// residual.
pub fn b_values(m: i64, n: i64, ks: impl IntoIterator<Item = i64>) -> Result<Vec<BValue>> {
    if excluded(m, n) {
        return Err(Error::ExcludedRegion { m, n });
    }
    let r = cubic_roots(m, n)?;
    let log_c = r.c.ln();
    Ok(ks
        .into_iter()
        .map(|k| {
            let h = (r.phi + 2.0 * k as f64 * PI) / log_c;
            BValue {
                k,
                h,
                residual: self_consistency_residual(m, n, r.c, h),
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PisotClass {
    CPisot,
    CInversePisot,
    Neither,
}

impl PisotClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PisotClass::CPisot => "c_pisot",
            PisotClass::CInversePisot => "c_inverse_pisot",
            PisotClass::Neither => "neither",
        }
    }
}

/// `c` Pisot iff `c > 1` and `|α| < 1`; since `c|α|² = 1` this is just
/// `c > 1`, and symmetrically for `1/c`.
pub fn pisot_check(m: i64, n: i64) -> Result<PisotClass> {
    if !in_sigma_prime(m, n) {
        return Err(Error::Precondition(format!("({m}, {n}) is not in Σ′")));
    }
    let r = cubic_roots(m, n)?;
    let modulus = (r.alpha_re * r.alpha_re + r.alpha_im * r.alpha_im).sqrt();
    Ok(if r.c > 1.0 && modulus < 1.0 {
        PisotClass::CPisot
    } else if r.c < 1.0 && modulus > 1.0 {
        PisotClass::CInversePisot
    } else {
        PisotClass::Neither
    })
}
