//! `zeta(s)` by Euler–Maclaurin summation with Bernoulli corrections through `B_10`.
//!
//! `zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//!            + sum_{j=1}^{5} B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1} + R`
//!
//! with `|R| <= |s(s+1)...(s+10)| |B_12| / 12! N^{-sigma-11} / (sigma + 11)`.

#[allow(unused_imports)]
use num_traits::Float;

use super::PrecisionPolicy;
use crate::error::{Error, Result};
use crate::sum::ComplexNeumaier;
use crate::Complex64;
use alloc::vec;
use alloc::vec::Vec;

/// `B_2, B_4, ..., B_10` divided by `(2j)!`, then `B_12 / 12!` for the bound.
const BERNOULLI_OVER_FACT: [f64; 6] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
];
const ORDER: usize = 5;
const MAX_IM: f64 = 1e6;
const MAX_N: usize = 1 << 24;

/// Truncation plan for one evaluation: head length `n`, correction order and
/// the rigorous remainder bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaPlan {
    /// The head sum runs over `1 <= m < n`.
    pub n: usize,
    /// Number of Bernoulli corrections.
    pub order: usize,
    /// Bound on the Euler–Maclaurin remainder.
    pub tail_bound: f64,
}

impl ZetaPlan {
    /// Smallest plan from `N = max(20, 2|Im s|)` upward (doubling) whose
    /// remainder bound meets `policy.target_abs_tol`.
    pub fn for_point(s: Complex64, policy: &PrecisionPolicy) -> Result<Self> {
        let sigma = s.re;
        if sigma + (2 * ORDER + 1) as f64 <= 0.5 {
            return Err(Error::Domain(alloc::format!("Re s = {sigma} is below the Euler-Maclaurin range")));
        }
        let mut poch = 1.0;
        for j in 0..=2 * ORDER {
            poch *= (s + j as f64).norm();
        }
        let coef = poch * BERNOULLI_OVER_FACT[ORDER].abs() / (sigma + (2 * ORDER + 1) as f64);
        let mut n = (2.0 * s.im.abs()).ceil().max(20.0) as usize;
        loop {
            let bound = coef * (n as f64).powf(-sigma - (2 * ORDER + 1) as f64);
            if bound <= policy.target_abs_tol {
                return Ok(Self { n, order: ORDER, tail_bound: bound });
            }
            if n >= MAX_N {
                return Err(Error::Precision(alloc::format!(
                    "zeta remainder bound {bound:e} exceeds {:e} at N = {n}",
                    policy.target_abs_tol
                )));
            }
            n *= 2;
        }
    }
}

/// `zeta(s)` under the default [`PrecisionPolicy`].
pub fn zeta(s: Complex64) -> Result<Complex64> {
    zeta_with(s, &PrecisionPolicy::default())
}

/// `zeta(s)` under an explicit policy.
pub fn zeta_with(s: Complex64, policy: &PrecisionPolicy) -> Result<Complex64> {
    check_point(s)?;
    let plan = ZetaPlan::for_point(s, policy)?;
    Ok(eval_plan(s, &plan))
}

/// Reusable evaluator: a smallest-prime-factor table lets the head sum build
/// `m^{-s}` multiplicatively, so only primes cost an exponential.
#[derive(Debug, Clone)]
pub struct ZetaEngine {
    spf: Vec<u32>,
}

impl ZetaEngine {
    /// Table for head lengths up to `n_max`.
    pub fn new(n_max: usize) -> Self {
        let mut spf = vec![0u32; n_max + 1];
        for i in 2..=n_max {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n_max {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Self { spf }
    }

    /// Engine sized for `|Im s| <= t_max` under the default head-length rule.
    pub fn for_height(t_max: f64) -> Self {
        Self::new((2.0 * t_max.abs()).ceil().max(20.0) as usize + 1)
    }

    /// `zeta(s)` under `policy`; same plan as [`zeta_with`].
    pub fn zeta(&self, s: Complex64, policy: &PrecisionPolicy) -> Result<Complex64> {
        check_point(s)?;
        let plan = ZetaPlan::for_point(s, policy)?;
        if plan.n > self.spf.len() {
            return Ok(eval_plan(s, &plan));
        }
        let mut pw = vec![Complex64::new(0.0, 0.0); plan.n];
        let mut acc = ComplexNeumaier::new();
        if plan.n > 1 {
            pw[1] = Complex64::new(1.0, 0.0);
            acc.add(pw[1]);
        }
        for m in 2..plan.n {
            let p = self.spf[m] as usize;
            pw[m] = if p == m { npow(m as f64, s) } else { pw[p] * pw[m / p] };
            acc.add(pw[m]);
        }
        Ok(acc.total() + tail(s, &plan))
    }
}

fn check_point(s: Complex64) -> Result<()> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("zeta at s = 1".into()));
    }
    if s.im.abs() > MAX_IM {
        return Err(Error::Domain(alloc::format!("|Im s| = {} exceeds {MAX_IM:e}", s.im.abs())));
    }
    Ok(())
}

/// Evaluate with a fixed plan (used by tests to compare head lengths).
pub(crate) fn eval_plan(s: Complex64, plan: &ZetaPlan) -> Complex64 {
    let n = plan.n;
    let mut acc = ComplexNeumaier::new();
    acc.add(Complex64::new(1.0, 0.0));
    for m in 2..n {
        acc.add(npow(m as f64, s));
    }
    acc.total() + tail(s, plan)
}

/// Integral, half-term and Bernoulli corrections at the cut `N`.
fn tail(s: Complex64, plan: &ZetaPlan) -> Complex64 {
    let n = plan.n;
    let mut acc = ComplexNeumaier::new();
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_s = (-s * ln_n).exp();
    acc.add(n_s * nf / (s - 1.0));
    acc.add(n_s * 0.5);
    // s(s+1)...(s+2j-2) N^{-s-2j+1}
    let mut poch = s;
    let mut pow = n_s / nf;
    for (j, &b) in BERNOULLI_OVER_FACT.iter().enumerate().take(plan.order) {
        acc.add(poch * pow * b);
        let k = (2 * j + 1) as f64;
        poch = poch * (s + k) * (s + k + 1.0);
        pow /= nf * nf;
    }
    acc.total()
}

#[inline]
fn npow(m: f64, s: Complex64) -> Complex64 {
    let l = m.ln();
    let mag = (-s.re * l).exp();
    let (sn, cs) = (s.im * l).sin_cos();
    Complex64::new(mag * cs, -mag * sn)
}
