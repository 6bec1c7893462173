//! Univariate polynomials over ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::ExactScalar;

/// Polynomial with coefficients stored from the constant term upward.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Vec<ExactScalar>);

impl Poly {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Poly::new(vec![c])
    }

    /// `x − a`.
    pub fn linear(a: ExactScalar) -> Self {
        Poly(vec![-a, ExactScalar::one()])
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.0.get(i).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> ExactScalar {
        self.0.last().cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &ExactScalar) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.0.clone();
        let mut quot = vec![ExactScalar::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            for (i, d) in divisor.0.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero when both inputs vanish).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.0
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Rational roots (without multiplicity), in increasing order.
    ///
    /// Uses the rational root test on the primitive integer multiple of the
    /// square-free part, so it is only meant for moderate coefficients.
    pub fn rational_roots(&self) -> Vec<ExactScalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut p = self.clone();
        let mut roots = Vec::new();
        // strip the factor x^k
        let zeros = p.0.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.push(ExactScalar::zero());
            p = Poly::new(p.0[zeros..].to_vec());
        }
        let ints = p.integer_coeffs();
        let (Some(c0), Some(cn)) = (ints.first(), ints.last()) else {
            return roots;
        };
        for q in divisors(cn) {
            for a in divisors(c0) {
                for s in [BigInt::one(), -BigInt::one()] {
                    let cand = BigRational::new(&a * &s, q.clone());
                    if !roots.contains(&cand) && p.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Primitive integer coefficients with positive leading term.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self.0.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in ints.iter_mut() {
                *c = &*c / &g;
            }
        }
        if ints.last().is_some_and(|l| l.is_negative()) {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
        }
        ints
    }

    /// Sturm sequence `p, p', −rem(p, p'), …`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            seq.push(Poly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        seq.pop();
        seq
    }

    /// Number of distinct real roots (exact, via Sturm's theorem).
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let seq = self.sturm_sequence();
        let at_minus: Vec<i8> = seq
            .iter()
            .map(|p| {
                let s = sign(&p.leading());
                if p.degree().unwrap_or(0) % 2 == 0 {
                    s
                } else {
                    -s
                }
            })
            .collect();
        let at_plus: Vec<i8> = seq.iter().map(|p| sign(&p.leading())).collect();
        sign_changes(&at_minus) - sign_changes(&at_plus)
    }

    /// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier.
    pub fn char_poly(a: &[Vec<ExactScalar>]) -> Poly {
        let n = a.len();
        let mut coeffs = vec![ExactScalar::zero(); n + 1];
        coeffs[n] = ExactScalar::one();
        // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
        let mut m = vec![vec![ExactScalar::zero(); n]; n];
        for k in 1..=n {
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &coeffs[n - k + 1];
            }
            let am = crate::exterior::linalg::mat_mul(a, &m);
            let tr: ExactScalar = (0..n).map(|i| am[i][i].clone()).sum();
            coeffs[n - k] = -tr / BigRational::from_integer(k.into());
            m = am;
        }
        Poly::new(coeffs)
    }
}

fn sign(x: &ExactScalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: &[i8]) -> usize {
    let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let Some(v) = n.to_u64() else {
        return vec![BigInt::one(), n];
    };
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(BigInt::from(d));
            if d * d != v {
                large.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, a) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let body = crate::scalar::format(&a);
            match (i, a.is_one()) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{body}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{body}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Invariant factors of `xI − A` over ℚ[x] (monic, each dividing the next,
/// units dropped). Two matrices are similar over ℚ iff these agree.
pub fn invariant_factors(a: &[Vec<ExactScalar>]) -> Vec<Poly> {
    let n = a.len();
    let mut m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = Poly::constant(-a[i][j].clone());
                    if i == j {
                        p = p.add(&Poly::new(vec![ExactScalar::zero(), ExactScalar::one()]));
                    }
                    p
                })
                .collect()
        })
        .collect();
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            // pivot: nonzero entry of least degree in the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if let Some(d) = m[i][j].degree() {
                        if best.is_none_or(|b| d < b.2) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                break;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let pivot = m[t][t].clone();
            let mut dirty = false;
            for i in t + 1..n {
                let (q, r) = m[i][t].div_rem(&pivot);
                if !q.is_zero() {
                    for j in t..n {
                        let v = m[i][j].sub(&q.mul(&m[t][j]));
                        m[i][j] = v;
                    }
                }
                dirty |= !r.is_zero();
            }
            for j in t + 1..n {
                let (q, r) = m[t][j].div_rem(&pivot);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(t) {
                        let v = row[j].sub(&q.mul(&row[t]));
                        row[j] = v;
                    }
                }
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !m[i][j].rem(&pivot).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = m[t][j].add(&m[i][j]);
                        m[t][j] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].monic());
    }
    diag.into_iter().filter(|p| p.degree().unwrap_or(0) > 0).collect()
}
