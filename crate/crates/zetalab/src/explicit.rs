//! The analytic side: the phase functions `xi`, `f`, `g`, the exponential sums
//! `S1(T, Y)` and `S2(T, xi(T, Y))`, the residual of the `[T, 2T]` formula and
//! the dyadic reconstruction of the `[0, T]` statement.
//!
//! Three bundlings of the constant in front of each sum are available through
//! [`Normalization`]; the radical sign in `f` and the twist of `S2` are flags.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{E, PI};

#[allow(unused_imports)]
use num_traits::Float;

use crate::arithmetic::{DirichletPolynomial, PairData, SigmaTable};
use crate::error::{Error, Result};
use crate::meansquare::{integrate_mean_square_with, main_term_form, MainTermForm, MeanSquareOptions, StripConfig};
use crate::quad::{Executor, QuadratureResult};
use crate::special::arcsinh;
use crate::sum::Neumaier;
use crate::Complex64;

/// Sign under the radical of `f(T, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadicalSign {
    /// `sqrt(2 pi u T + pi^2 u^2)`, real for every `u >= 0`.
    #[default]
    Plus,
    /// `sqrt(2 pi u T - pi^2 u^2)`; undefined once `u > 2T/pi`.
    Minus,
}

/// Residue class multiplying `n / lambda` in the additive twist of `S2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sigma2Twist {
    /// `e(-kappa n / lambda)`.
    #[default]
    Kappa,
    /// `e(-kappa_bar n / lambda)`, the class used by `S1`.
    KappaBar,
}

/// Constant bundling of the two sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// `S1` carries `exp(-2 pi i sigma)` and `(1 + 2 T kappa lambda / pi n)^{-1/4}`;
    /// `S2` carries `4 pi / (pi^{1/2+sigma} 2^{sigma-1/2})`.
    #[default]
    Printed,
    /// `S1` carries `C / (2^{sigma+1} pi^{sigma-1/2})` with
    /// `C = -(2 pi)^{2 sigma - 1} e^{(1/2 - 3 sigma) pi i}` and
    /// `(1/4 + T kappa lambda / 2 pi n)^{-1/4}`; `S2` as printed.
    Expanded,
    /// The classical `sigma = 1/2` constants carried to general `sigma` through
    /// `|chi(sigma + it)|^2 ~ (t / 2 pi)^{1 - 2 sigma}`: `S1` carries the real
    /// factor `(2 pi)^{sigma - 1/2}` and `S2` carries `2 (2 pi)^{sigma - 1/2}`.
    Transfer,
}

/// All formula switches in one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FormulaVariant {
    /// Radical sign in `f`.
    pub radical: RadicalSign,
    /// Twist class of `S2`.
    pub twist: Sigma2Twist,
    /// Constant bundling of `S1` and `S2`.
    pub normalization: Normalization,
    /// Main-term bundling.
    pub main: MainTermForm,
}

/// Window parameters `C1 T < Y < C2 T`, `T >= max(e, 1/C1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowConfig {
    /// Lower window constant.
    pub c1: f64,
    /// Upper window constant.
    pub c2: f64,
    /// Cutoff parameter `Y`.
    pub y: f64,
    /// Height `T`.
    pub t: f64,
}

impl WindowConfig {
    /// Default window `C1 = 1/2`, `C2 = 2`, `Y = T`.
    pub fn centred(t: f64) -> Result<Self> {
        let w = Self { c1: 0.5, c2: 2.0, y: t, t };
        w.validate()?;
        Ok(w)
    }

    /// The constant `C* = max(e, 1/C1)`.
    pub fn c_star(&self) -> f64 {
        E.max(1.0 / self.c1)
    }

    /// Check the window invariants.
    pub fn validate(&self) -> Result<()> {
        if !(self.c1 > 0.0 && self.c2 > self.c1) {
            return Err(Error::Config(format!("window needs 0 < C1 < C2, got C1 = {}, C2 = {}", self.c1, self.c2)));
        }
        if !(self.c1 * self.t < self.y && self.y < self.c2 * self.t) {
            return Err(Error::Config(format!("window needs C1 T < Y < C2 T, got Y = {} with T = {}", self.y, self.t)));
        }
        if !(self.t >= self.c_star()) {
            return Err(Error::Config(format!("window needs T >= max(e, 1/C1) = {}, got {}", self.c_star(), self.t)));
        }
        Ok(())
    }
}

/// `xi(T, u) = T/2pi + u/2 - sqrt(u^2/4 + uT/2pi)`.
pub fn xi(t: f64, u: f64) -> f64 {
    let a = t / (2.0 * PI);
    // a + u/2 - sqrt(u^2/4 + a u) written without cancellation
    let r = (0.25 * u * u + a * u).sqrt();
    let s = a + 0.5 * u;
    if r == 0.0 {
        return s;
    }
    a * a / (s + r)
}

/// `f(T, u) = 2T arcsinh sqrt(pi u / 2T) + sqrt(2 pi u T +- pi^2 u^2) - pi/4`.
pub fn f_phase(t: f64, u: f64, sign: RadicalSign) -> Result<f64> {
    let rad = match sign {
        RadicalSign::Plus => 2.0 * PI * u * t + PI * PI * u * u,
        RadicalSign::Minus => 2.0 * PI * u * t - PI * PI * u * u,
    };
    if rad < 0.0 {
        return Err(Error::Domain(format!("negative radicand in f(T = {t}, u = {u}) with the minus sign")));
    }
    Ok(2.0 * t * arcsinh((PI * u / (2.0 * t)).sqrt()) + rad.sqrt() - PI / 4.0)
}

/// `g(T, u) = T log(T / 2 pi u) - T + 2 pi u + pi/4`.
pub fn g_phase(t: f64, u: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::Domain(format!("g(T, u) needs u > 0, got {u}")));
    }
    Ok(t * (t / (2.0 * PI * u)).ln() - t + 2.0 * PI * u + PI / 4.0)
}

#[inline]
fn e(x: f64) -> Complex64 {
    // e(x) = exp(2 pi i x), argument already reduced mod 1 by the caller
    let (s, c) = (2.0 * PI * x).sin_cos();
    Complex64::new(c, s)
}

#[inline]
fn cis(theta: f64) -> Complex64 {
    let (s, c) = theta.sin_cos();
    Complex64::new(c, s)
}

/// One term of an exponential sum, kept for prefix/cutoff bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumTerm {
    /// Index of the `(k, l)` pair in lexicographic order of nonzero pairs.
    pub pair: usize,
    /// Summation index.
    pub n: u64,
    /// Real contribution of the term.
    pub value: f64,
}

/// A finite exponential sum and its term count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumValue {
    /// Total, accumulated in `(k, l, n)` order.
    pub value: f64,
    /// Number of terms.
    pub terms: usize,
}

fn cutoff1(p: &PairData, y: f64) -> u64 {
    ((p.kappa * p.lambda) as f64 * y).floor().max(0.0) as u64
}

fn cutoff2(p: &PairData, ycut: f64) -> u64 {
    (p.lambda as f64 / p.kappa as f64 * ycut).floor().max(0.0) as u64
}

/// Terms of `S1(T, Y)`. Cutoff `n <= kappa lambda Y` per pair.
pub fn sigma1_terms(t: f64, y: f64, cfg: &StripConfig, a: &DirichletPolynomial, v: &FormulaVariant) -> Result<Vec<SumTerm>> {
    cfg.validate()?;
    if !(t > 0.0 && y >= 0.0) {
        return Err(Error::Domain(format!("S1 needs T > 0 and Y >= 0, got T = {t}, Y = {y}")));
    }
    let s = cfg.sigma;
    let pairs = a.pairs();
    let n_max = pairs.iter().map(|(p, _)| cutoff1(p, y)).max().unwrap_or(0);
    let table = SigmaTable::new(2.0 * s - 1.0, n_max as usize);
    let (pre, expanded) = match v.normalization {
        Normalization::Printed => (cis(-2.0 * PI * s), false),
        Normalization::Transfer => (Complex64::new((2.0 * PI).powf(s - 0.5), 0.0), false),
        Normalization::Expanded => {
            let c = -(2.0 * PI).powf(2.0 * s - 1.0) * cis((0.5 - 3.0 * s) * PI);
            (c / (2.0.powf(s + 1.0) * PI.powf(s - 0.5)), true)
        }
    };
    let t_pow = t.powf(0.5 - s);
    let mut out = Vec::new();
    for (idx, (p, w)) in pairs.iter().enumerate() {
        let kl = (p.kappa * p.lambda) as f64;
        let head = *w / (p.lcm as f64).powf(2.0 * s) * kl.powf(s) * pre * t_pow;
        for n in 1..=cutoff1(p, y) {
            let nf = n as f64;
            let u = nf / kl;
            let weight = if expanded {
                (0.25 + t * kl / (2.0 * PI * nf)).powf(-0.25)
            } else {
                (1.0 + 2.0 * t * kl / (PI * nf)).powf(-0.25)
            };
            let amp = table.get(n) * nf.powf(-s) / arcsinh((PI * nf / (2.0 * t * kl)).sqrt()) * weight;
            let twist = e(((p.kappa_bar * n) % p.lambda) as f64 / p.lambda as f64);
            let phase = f_phase(t, u, v.radical)? - PI * u + PI / 2.0;
            let z = head * twist * cis(phase) * amp;
            out.push(SumTerm { pair: idx, n, value: z.im });
        }
    }
    Ok(out)
}

/// Terms of `S2(T, Ycut)` with `Ycut = xi(T, Y)`. Cutoff `n <= (lambda/kappa) Ycut`.
pub fn sigma2_terms(t: f64, ycut: f64, cfg: &StripConfig, a: &DirichletPolynomial, v: &FormulaVariant) -> Result<Vec<SumTerm>> {
    cfg.validate()?;
    if !(t > 0.0 && ycut >= 0.0) {
        return Err(Error::Domain(format!("S2 needs T > 0 and Ycut >= 0, got T = {t}, Ycut = {ycut}")));
    }
    let s = cfg.sigma;
    let pairs = a.pairs();
    let n_max = pairs.iter().map(|(p, _)| cutoff2(p, ycut)).max().unwrap_or(0);
    let table = SigmaTable::new(2.0 * s - 1.0, n_max as usize);
    let q = match v.normalization {
        Normalization::Printed | Normalization::Expanded => 4.0 * PI / (PI.powf(0.5 + s) * 2.0.powf(s - 0.5)),
        Normalization::Transfer => 2.0 * (2.0 * PI).powf(s - 0.5),
    };
    let front = -t.powf(0.5 - s) * q;
    let mut out = Vec::new();
    for (idx, (p, w)) in pairs.iter().enumerate() {
        let (kf, lf) = (p.kappa as f64, p.lambda as f64);
        let head = *w / (p.lcm as f64).powf(2.0 * s) * (kf * lf).powf(s);
        let cls = match v.twist {
            Sigma2Twist::Kappa => p.kappa,
            Sigma2Twist::KappaBar => p.kappa_bar,
        };
        for n in 1..=cutoff2(p, ycut) {
            let nf = n as f64;
            let u = kf * nf / lf;
            if !(u < t / (2.0 * PI)) {
                return Err(Error::Domain(format!(
                    "S2 term n = {n} for pair ({}, {}) has kappa n / lambda = {u} >= T/2pi = {}",
                    p.k,
                    p.l,
                    t / (2.0 * PI)
                )));
            }
            let twist = e(-(((cls * n) % p.lambda) as f64) / lf);
            let amp = table.get(n) * nf.powf(-s) / (lf * t / (2.0 * PI * kf * nf)).ln();
            let z = head * twist * cis(g_phase(t, u)?) * amp;
            out.push(SumTerm { pair: idx, n, value: front * z.re });
        }
    }
    Ok(out)
}

fn total(terms: &[SumTerm]) -> SumValue {
    let mut acc = Neumaier::new();
    for t in terms {
        acc.add(t.value);
    }
    SumValue { value: acc.total(), terms: terms.len() }
}

/// `S1(T, Y)`.
pub fn sigma1(t: f64, y: f64, cfg: &StripConfig, a: &DirichletPolynomial, v: &FormulaVariant) -> Result<SumValue> {
    Ok(total(&sigma1_terms(t, y, cfg, a, v)?))
}

/// `S2(T, Ycut)`.
pub fn sigma2(t: f64, ycut: f64, cfg: &StripConfig, a: &DirichletPolynomial, v: &FormulaVariant) -> Result<SumValue> {
    Ok(total(&sigma2_terms(t, ycut, cfg, a, v)?))
}

/// `M(T)`, `S1(T, Y)` and `S2(T, xi(T, Y))` at one height.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExplicitTerms {
    /// Height.
    pub t: f64,
    /// Cutoff parameter.
    pub y: f64,
    /// `S1(T, Y)`.
    pub sigma1: f64,
    /// `S2(T, xi(T, Y))`.
    pub sigma2: f64,
    /// `M(T, A)`.
    pub main: f64,
    /// Terms in `S1`.
    pub terms_used_1: usize,
    /// Terms in `S2`.
    pub terms_used_2: usize,
}

impl ExplicitTerms {
    /// `M + S1 + S2`.
    pub fn total(&self) -> f64 {
        let mut acc = Neumaier::new();
        acc.add(self.main);
        acc.add(self.sigma1);
        acc.add(self.sigma2);
        acc.total()
    }

    /// `S1 + S2`.
    pub fn oscillation(&self) -> f64 {
        self.sigma1 + self.sigma2
    }
}

/// Evaluate the explicit side at `(T, Y)`.
pub fn explicit_terms(t: f64, y: f64, cfg: &StripConfig, a: &DirichletPolynomial, v: &FormulaVariant) -> Result<ExplicitTerms> {
    let s1 = sigma1(t, y, cfg, a, v)?;
    let s2 = sigma2(t, xi(t, y), cfg, a, v)?;
    let main = if a.is_zero() { 0.0 } else { main_term_form(t, cfg, a, v.main)? };
    Ok(ExplicitTerms { t, y, sigma1: s1.value, sigma2: s2.value, main, terms_used_1: s1.terms, terms_used_2: s2.terms })
}

/// Residual of the `[T, 2T]` formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Report {
    /// Window used.
    pub window: WindowConfig,
    /// `int_T^{2T} |zeta A|^2`.
    pub integral: QuadratureResult,
    /// Explicit side at `(T, Y)`.
    pub lower: ExplicitTerms,
    /// Explicit side at `(2T, 2Y)`.
    pub upper: ExplicitTerms,
    /// `R(T, 2T, A)`.
    pub residual: f64,
    /// `|R| / (T^{1 - 2 sigma} log T)`.
    pub normalized: f64,
    /// Increment of `S1 + S2` across the window.
    pub oscillation: f64,
}

/// `R(T, 2T, A) = int_T^{2T} - [M + S1 + S2](2T, 2Y) + [M + S1 + S2](T, Y)`.
pub fn theorem1_residual(
    win: &WindowConfig,
    cfg: &StripConfig,
    a: &DirichletPolynomial,
    v: &FormulaVariant,
    opts: &MeanSquareOptions,
    exec: &dyn Executor,
) -> Result<Theorem1Report> {
    win.validate()?;
    let integral = integrate_mean_square_with(win.t, 2.0 * win.t, cfg, a, opts, exec)?;
    theorem1_from_integral(win, cfg, a, v, integral)
}

/// [`theorem1_residual`] with the integral supplied by the caller, so that
/// variant sweeps share one quadrature.
pub fn theorem1_from_integral(
    win: &WindowConfig,
    cfg: &StripConfig,
    a: &DirichletPolynomial,
    v: &FormulaVariant,
    integral: QuadratureResult,
) -> Result<Theorem1Report> {
    win.validate()?;
    let lower = explicit_terms(win.t, win.y, cfg, a, v)?;
    let upper = explicit_terms(2.0 * win.t, 2.0 * win.y, cfg, a, v)?;
    let mut acc = Neumaier::new();
    acc.add(integral.value);
    acc.add(-upper.total());
    acc.add(lower.total());
    let residual = acc.total();
    let t = win.t;
    Ok(Theorem1Report {
        window: *win,
        integral,
        lower,
        upper,
        residual,
        normalized: residual.abs() / (t.powf(1.0 - 2.0 * cfg.sigma) * t.ln()),
        oscillation: upper.oscillation() - lower.oscillation(),
    })
}

/// Two-path evaluation of `E(T) - S1(T, Y) - S2(T, xi(T, Y))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Theorem2Report {
    /// Number of dyadic levels `L`.
    pub levels: u32,
    /// `E(T) - S1 - S2` from one integral over `[0, T]`.
    pub direct: f64,
    /// Sum of the level residuals plus the stub `[0, 2^{-L} T]` contribution.
    pub telescoped: f64,
    /// `direct - telescoped`.
    pub difference: f64,
    /// Sum of all quadrature error estimates entering either path.
    pub error_sum: f64,
    /// Level residuals `R(2^{-j} T, 2^{1-j} T)`, `j = 1..L`.
    pub level_residuals: Vec<f64>,
    /// Stub integral over `[0, 2^{-L} T]`.
    pub stub: QuadratureResult,
    /// Direct integral over `[0, T]`.
    pub integral: QuadratureResult,
}

/// `L = floor((log T - log C* - alpha log log T) / log 2)`.
pub fn dyadic_levels(t: f64, c_star: f64, alpha: f64) -> i64 {
    ((t.ln() - c_star.ln() - alpha * t.ln().ln()) / 2.0.ln()).floor() as i64
}

/// Compare the direct `[0, T]` evaluation with the dyadic telescoping of
/// `[T, 2T]` residuals. `levels` overrides the computed `L` when given.
#[allow(clippy::too_many_arguments)]
pub fn theorem2_reconstruction(
    win: &WindowConfig,
    cfg: &StripConfig,
    a: &DirichletPolynomial,
    alpha: f64,
    levels: Option<u32>,
    v: &FormulaVariant,
    opts: &MeanSquareOptions,
    exec: &dyn Executor,
) -> Result<Theorem2Report> {
    win.validate()?;
    if !(alpha > 0.0) {
        return Err(Error::Config(format!("alpha must be positive, got {alpha}")));
    }
    let t = win.t;
    let l = match levels {
        Some(l) => l,
        None => {
            let l = dyadic_levels(t, win.c_star(), alpha);
            if l < 1 {
                return Err(Error::Config(format!("T = {t} too small for a dyadic level with alpha = {alpha}")));
            }
            l as u32
        }
    };
    let scale = 2.0.powi(-(l as i32));
    let integral = integrate_mean_square_with(0.0, t, cfg, a, opts, exec)?;
    let top = explicit_terms(t, win.y, cfg, a, v)?;
    let direct = {
        let mut acc = Neumaier::new();
        acc.add(integral.value);
        acc.add(-top.total());
        acc.total()
    };
    let mut err = Neumaier::new();
    err.add(integral.abs_error_estimate);
    let mut tel = Neumaier::new();
    let mut level_residuals = Vec::new();
    for j in 1..=l {
        let s = 2.0.powi(-(j as i32));
        let w = WindowConfig { t: s * t, y: s * win.y, ..*win };
        let r = {
            let q = integrate_mean_square_with(w.t, 2.0 * w.t, cfg, a, opts, exec)?;
            theorem1_from_integral(&WindowConfig { ..w }, cfg, a, v, q).or_else(|_| {
                // windows below C* are still algebraically valid for telescoping
                let lower = explicit_terms(w.t, w.y, cfg, a, v)?;
                let upper = explicit_terms(2.0 * w.t, 2.0 * w.y, cfg, a, v)?;
                let mut acc = Neumaier::new();
                acc.add(q.value);
                acc.add(-upper.total());
                acc.add(lower.total());
                Ok::<_, Error>(Theorem1Report {
                    window: w,
                    integral: q,
                    lower,
                    upper,
                    residual: acc.total(),
                    normalized: f64::NAN,
                    oscillation: upper.oscillation() - lower.oscillation(),
                })
            })?
        };
        err.add(r.integral.abs_error_estimate);
        tel.add(r.residual);
        level_residuals.push(r.residual);
    }
    let stub = integrate_mean_square_with(0.0, scale * t, cfg, a, opts, exec)?;
    err.add(stub.abs_error_estimate);
    let bottom = explicit_terms(scale * t, scale * win.y, cfg, a, v)?;
    tel.add(stub.value);
    tel.add(-bottom.total());
    let telescoped = tel.total();
    Ok(Theorem2Report {
        levels: l,
        direct,
        telescoped,
        difference: direct - telescoped,
        error_sum: err.total(),
        level_residuals,
        stub,
        integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_examples() {
        assert_eq!(xi(10.0, 0.0), 10.0 / (2.0 * PI));
        assert!((xi(2.0 * PI, 1.0) - 0.381_966_011_250_105_15).abs() < 1e-15);
    }

    #[test]
    fn f_examples() {
        assert!((f_phase(5.0, 0.0, RadicalSign::Plus).unwrap() + PI / 4.0).abs() < 1e-15);
        let v = f_phase(2.0 * PI, 1.0, RadicalSign::Plus).unwrap();
        assert!((v - 12.286_502_705_354_426).abs() < 1e-13);
        assert!(f_phase(10.0, 7.0, RadicalSign::Minus).is_err());
        assert!(f_phase(10.0, 6.0, RadicalSign::Minus).is_ok());
    }

    #[test]
    fn g_examples() {
        let t = 40.0;
        assert!((g_phase(t, t / (2.0 * PI)).unwrap() - PI / 4.0).abs() < 1e-12);
        let v = g_phase(2.0 * PI * E, 1.0).unwrap();
        assert!((v - (2.0 * PI + PI / 4.0)).abs() < 1e-13);
        assert!(g_phase(1.0, 0.0).is_err());
        let h = 1e-5;
        let u0 = t / (2.0 * PI);
        let d = (g_phase(t, u0 + h).unwrap() - g_phase(t, u0 - h).unwrap()) / (2.0 * h);
        assert!(d.abs() < 1e-6);
    }

    #[test]
    fn window_validation() {
        assert!(WindowConfig::centred(100.0).is_ok());
        assert!(WindowConfig::centred(2.0).is_err());
        let w = WindowConfig { c1: 0.5, c2: 2.0, y: 30.0, t: 100.0 };
        assert!(w.validate().is_err());
    }

    #[test]
    fn single_pair_structure() {
        let cfg = StripConfig::with_sigma(0.4).unwrap();
        let a = DirichletPolynomial::one();
        let v = FormulaVariant::default();
        let terms = sigma1_terms(100.0, 100.5, &cfg, &a, &v).unwrap();
        assert_eq!(terms.len(), 100);
        assert!(terms.iter().all(|t| t.pair == 0));
        let s2 = sigma2_terms(100.0, xi(100.0, 100.0), &cfg, &a, &v).unwrap();
        assert_eq!(s2.len() as u64, xi(100.0, 100.0).floor() as u64);
    }

    #[test]
    fn zero_polynomial_sums_vanish() {
        let cfg = StripConfig::with_sigma(0.4).unwrap();
        let a = DirichletPolynomial::from_real(&[0.0, 0.0]).unwrap();
        let v = FormulaVariant::default();
        let e = explicit_terms(100.0, 100.0, &cfg, &a, &v).unwrap();
        assert_eq!((e.sigma1, e.sigma2, e.main, e.terms_used_1), (0.0, 0.0, 0.0, 0));
    }

    #[test]
    fn sigma2_rejects_bad_cutoff() {
        let cfg = StripConfig::with_sigma(0.4).unwrap();
        let a = DirichletPolynomial::one();
        let r = sigma2(100.0, 100.0 / (2.0 * PI) + 1.0, &cfg, &a, &FormulaVariant::default());
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn levels_formula() {
        assert_eq!(dyadic_levels(800.0, E, 1.0), 5);
    }
}
