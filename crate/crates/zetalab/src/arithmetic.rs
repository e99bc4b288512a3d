//! Integer and divisor arithmetic: gcd/lcm, coprime parts of a pair with the
//! inverse of one part modulo the other, real-exponent divisor sums and the
//! coefficients of `zeta(s) A(s)` as a Dirichlet series.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::Complex64;

/// Greatest common divisor (binary-free Euclid).
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Extended Euclid: returns `(g, x, y)` with `a x + b y = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Inverse of `a` modulo `m` in `[0, m)`, or `None` when not coprime.
/// For `m = 1` the answer is `0`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd((a % m) as i64, m as i64);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i64) as u64)
}

/// Arithmetic bundle of a pair `(k, l)`.
///
/// `kappa = k/g`, `lambda = l/g` with `g = gcd(k, l)`; `kappa_bar` is the
/// inverse of `kappa` modulo `lambda`, canonicalised to `[0, lambda)`, and is
/// `0` when `lambda = 1`. Only its class mod `lambda` enters `e(kappa_bar n / lambda)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairData {
    /// First index.
    pub k: u64,
    /// Second index.
    pub l: u64,
    /// `gcd(k, l)`.
    pub g: u64,
    /// `lcm(k, l)`.
    pub lcm: u64,
    /// `k / g`.
    pub kappa: u64,
    /// `l / g`.
    pub lambda: u64,
    /// Inverse of `kappa` mod `lambda` in `[0, lambda)`.
    pub kappa_bar: u64,
}

/// Build the [`PairData`] of `(k, l)`. Panics if either index is zero.
pub fn pair_data(k: u64, l: u64) -> PairData {
    assert!(k >= 1 && l >= 1, "pair indices must be positive");
    let g = gcd(k, l);
    let kappa = k / g;
    let lambda = l / g;
    let kappa_bar = mod_inverse(kappa, lambda).expect("coprime parts are coprime");
    PairData { k, l, g, lcm: kappa * l, kappa, lambda, kappa_bar }
}

/// `sigma_a(n) = sum of d^a over the divisors of n`, by trial division to `sqrt(n)`.
///
/// Divisors are accumulated in increasing order so the result does not depend
/// on how the pairs `(d, n/d)` are visited.
pub fn divisor_sigma(a: f64, n: u64) -> f64 {
    assert!(n >= 1, "divisor_sigma needs n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    let mut acc = crate::sum::Neumaier::new();
    for &d in small.iter().chain(large.iter().rev()) {
        acc.add((d as f64).powf(a));
    }
    acc.total()
}

/// Table of `sigma_a(n)` for `1 <= n <= n_max`, sieved once and then shared
/// read-only; this is the memo used by the inner loops of the exponential sums.
#[derive(Debug, Clone)]
pub struct SigmaTable {
    a: f64,
    vals: Vec<f64>,
}

impl SigmaTable {
    /// Sieve `sigma_a` up to `n_max`. Each entry adds its divisors in increasing order.
    pub fn new(a: f64, n_max: usize) -> Self {
        let mut vals = vec![0.0; n_max + 1];
        for d in 1..=n_max {
            let p = (d as f64).powf(a);
            let mut m = d;
            while m <= n_max {
                vals[m] += p;
                m += d;
            }
        }
        Self { a, vals }
    }

    /// Exponent of the table.
    pub fn exponent(&self) -> f64 {
        self.a
    }

    /// Largest tabulated `n`.
    pub fn n_max(&self) -> usize {
        self.vals.len().saturating_sub(1)
    }

    /// `sigma_a(n)`; falls back to trial division beyond the table.
    #[inline]
    pub fn get(&self, n: u64) -> f64 {
        match self.vals.get(n as usize) {
            Some(&v) if n >= 1 => v,
            _ => divisor_sigma(self.a, n),
        }
    }
}

/// Dirichlet polynomial `A(s) = sum_{m <= M} a(m) m^{-s}` with complex coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletPolynomial {
    coeffs: Vec<Complex64>,
}

impl DirichletPolynomial {
    /// Coefficients `a(1), ..., a(M)`; must be non-empty and finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Config("Dirichlet polynomial needs M >= 1 coefficients".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::Config("Dirichlet polynomial coefficients must be finite".into()));
        }
        Ok(Self { coeffs })
    }

    /// Real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `A = 1`.
    pub fn one() -> Self {
        Self { coeffs: vec![Complex64::new(1.0, 0.0)] }
    }

    /// Length `M`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Always false; `M >= 1` by construction.
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient `a(m)` for `1 <= m <= M`, zero outside.
    pub fn coeff(&self, m: usize) -> Complex64 {
        if m == 0 || m > self.coeffs.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[m - 1]
        }
    }

    /// All coefficients in order.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// True when every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// True when every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    /// Evaluate `A(s)`.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        let mut acc = crate::sum::ComplexNeumaier::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            let m = (i + 1) as f64;
            acc.add(c * (-s * m.ln()).exp());
        }
        acc.total()
    }

    /// Nonzero `(k, l)` pairs with weight `a(k) conj(a(l))`, in lexicographic order.
    pub fn pairs(&self) -> Vec<(PairData, Complex64)> {
        let m = self.len() as u64;
        let mut out = Vec::new();
        for k in 1..=m {
            for l in 1..=m {
                let w = self.coeff(k as usize) * self.coeff(l as usize).conj();
                if w.re != 0.0 || w.im != 0.0 {
                    out.push((pair_data(k, l), w));
                }
            }
        }
        out
    }
}

/// `b(m) = sum of a(k) over k <= M dividing m`.
pub fn b_coefficient(m: u64, a: &DirichletPolynomial) -> Complex64 {
    assert!(m >= 1, "b_coefficient needs m >= 1");
    let mut acc = crate::sum::ComplexNeumaier::new();
    for k in 1..=(a.len() as u64).min(m) {
        if m.is_multiple_of(k) {
            acc.add(a.coeff(k as usize));
        }
    }
    acc.total()
}
