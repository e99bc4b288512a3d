//! The empirical side: `|zeta(sigma+it) A(sigma+it)|^2`, its adaptive integral,
//! the smooth main term `M(T, A)` and the error term `E = I - M`.

use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::arithmetic::DirichletPolynomial;
use crate::error::{Error, Result};
use crate::quad::{integrate, Executor, QuadOptions, QuadratureResult, Serial};
use crate::special::{gamma_real, zeta_with, PrecisionPolicy, ZetaEngine};
use crate::sum::ComplexNeumaier;
use crate::Complex64;

/// Abscissa `sigma` in the open strip `(1/4, 1/2)` with its precision policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripConfig {
    /// Real part of `s`.
    pub sigma: f64,
    /// Precision policy for zeta and friends.
    pub precision: PrecisionPolicy,
}

impl StripConfig {
    /// Validated constructor; the strip endpoints are rejected.
    pub fn new(sigma: f64, precision: PrecisionPolicy) -> Result<Self> {
        let c = Self { sigma, precision };
        c.validate()?;
        Ok(c)
    }

    /// `StripConfig::new(sigma, PrecisionPolicy::default())`.
    pub fn with_sigma(sigma: f64) -> Result<Self> {
        Self::new(sigma, PrecisionPolicy::default())
    }

    /// Check `1/4 < sigma < 1/2` and the precision policy.
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.25 && self.sigma < 0.5) {
            return Err(Error::Config(alloc::format!("sigma = {} violates 1/4 < sigma < 1/2 (open strip)", self.sigma)));
        }
        self.precision.validate()
    }
}

/// Which bundling of the second main-term coefficient to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MainTermForm {
    /// `a(k) conj(a(l)) / [k,l]^{2 sigma} * [k,l]^{2 sigma - 1}`, i.e. `1/[k,l]` overall.
    #[default]
    Printed,
    /// `a(k) conj(a(l)) / ((k,l)^{2 sigma - 1} [k,l])`, the form obtained from
    /// summing the diagonal Dirichlet series pair by pair.
    GcdWeighted,
}

/// Quadrature settings for the mean-square integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSquareOptions {
    /// Initial panels are at most `panel_const / log(2 + t)` and
    /// `panel_const / log(2 + M)` wide.
    pub panel_const: f64,
    /// Tolerances and budgets.
    pub quad: QuadOptions,
}

impl Default for MeanSquareOptions {
    fn default() -> Self {
        Self { panel_const: 4.0, quad: QuadOptions { abs_tol: 1e-9, rel_tol: 1e-11, ..QuadOptions::default() } }
    }
}

/// `|zeta(sigma+it)|^2 |A(sigma+it)|^2`.
pub fn integrand(t: f64, sigma: f64, a: &DirichletPolynomial) -> Result<f64> {
    integrand_with(t, sigma, a, &PrecisionPolicy::default())
}

/// [`integrand`] under an explicit precision policy.
pub fn integrand_with(t: f64, sigma: f64, a: &DirichletPolynomial, p: &PrecisionPolicy) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain(alloc::format!("t = {t} is not finite")));
    }
    if a.is_zero() {
        return Ok(0.0);
    }
    let s = Complex64::new(sigma, t);
    let z = zeta_with(s, p)?;
    let av = a.eval(s);
    Ok(z.norm_sqr() * av.norm_sqr())
}

/// Adaptive integral of the integrand over `[t1, t2]` with default options, serially.
pub fn integrate_mean_square(t1: f64, t2: f64, cfg: &StripConfig, a: &DirichletPolynomial) -> Result<QuadratureResult> {
    integrate_mean_square_with(t1, t2, cfg, a, &MeanSquareOptions::default(), &Serial)
}

/// Adaptive integral with explicit options and executor.
pub fn integrate_mean_square_with(
    t1: f64,
    t2: f64,
    cfg: &StripConfig,
    a: &DirichletPolynomial,
    opts: &MeanSquareOptions,
    exec: &dyn Executor,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    if !(t1 >= 0.0 && t2 >= t1) {
        return Err(Error::Domain(alloc::format!("need 0 <= T1 <= T2, got [{t1}, {t2}]")));
    }
    let c = opts.panel_const;
    let cap_m = c / (2.0 + a.len() as f64).ln();
    let width = move |t: f64| (c / (2.0 + t.abs() + c).ln()).min(cap_m);
    let sigma = cfg.sigma;
    let p = cfg.precision;
    if a.is_zero() {
        return integrate(|_| Ok(0.0), t1, t2, &width, &opts.quad, exec);
    }
    let engine = ZetaEngine::for_height(t2);
    let f = |t: f64| {
        let s = Complex64::new(sigma, t);
        let z = engine.zeta(s, &p)?;
        Ok(z.norm_sqr() * a.eval(s).norm_sqr())
    };
    integrate(f, t1, t2, &width, &opts.quad, exec)
}

/// Constants `zeta(2 sigma)` and `Gamma(2 sigma - 1) zeta(2 sigma - 1) cos((sigma - 1/2) pi) / (1 - sigma)`.
pub fn main_term_constants(cfg: &StripConfig) -> Result<(f64, f64)> {
    let s = cfg.sigma;
    let z2 = zeta_with(Complex64::new(2.0 * s, 0.0), &cfg.precision)?.re;
    let z1 = zeta_with(Complex64::new(2.0 * s - 1.0, 0.0), &cfg.precision)?.re;
    let g = gamma_real(2.0 * s - 1.0)?;
    Ok((z2, g * z1 * ((s - 0.5) * PI).cos() / (1.0 - s)))
}

/// Main term `M(T, A)` in the printed form.
pub fn main_term(t: f64, cfg: &StripConfig, a: &DirichletPolynomial) -> Result<f64> {
    main_term_form(t, cfg, a, MainTermForm::Printed)
}

/// Main term `M(T, A)` in the chosen form. The double sum is accumulated in
/// complex arithmetic and its imaginary residue is checked, not assumed away.
pub fn main_term_form(t: f64, cfg: &StripConfig, a: &DirichletPolynomial, form: MainTermForm) -> Result<f64> {
    cfg.validate()?;
    if !(t > 0.0) {
        return Err(Error::Domain(alloc::format!("main term needs T > 0, got {t}")));
    }
    let s = cfg.sigma;
    let (c1, c2) = main_term_constants(cfg)?;
    let lin = c1 * t;
    let pw = t.powf(2.0 - 2.0 * s);
    let mut acc = ComplexNeumaier::new();
    for (pd, w) in a.pairs() {
        let lcm = pd.lcm as f64;
        let mut second = c2 * lcm.powf(2.0 * s - 1.0) * pw;
        if form == MainTermForm::GcdWeighted {
            second *= (pd.g as f64).powf(1.0 - 2.0 * s);
        }
        acc.add(w * ((lin + second) / lcm.powf(2.0 * s)));
    }
    let total = acc.total();
    if total.im.abs() > 1e-8 * total.re.abs() + 1e-300 {
        return Err(Error::Precision(alloc::format!(
            "main term imaginary residue {:e} exceeds 1e-8 of the real part {:e}",
            total.im,
            total.re
        )));
    }
    Ok(total.re)
}

/// `E(T, A; sigma)` together with its two ingredients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorTermValue {
    /// `I(T) - M(T)`.
    pub value: f64,
    /// The integral over `[0, T]`.
    pub integral: QuadratureResult,
    /// The main term.
    pub main: f64,
}

/// `E(T, A; sigma) = I(T, A; sigma) - M(T, A)` with default options.
pub fn e_value(t: f64, cfg: &StripConfig, a: &DirichletPolynomial) -> Result<ErrorTermValue> {
    e_value_with(t, cfg, a, MainTermForm::Printed, &MeanSquareOptions::default(), &Serial)
}

/// [`e_value`] with explicit form, options and executor.
pub fn e_value_with(
    t: f64,
    cfg: &StripConfig,
    a: &DirichletPolynomial,
    form: MainTermForm,
    opts: &MeanSquareOptions,
    exec: &dyn Executor,
) -> Result<ErrorTermValue> {
    if !(t >= 2.0) {
        return Err(Error::Domain(alloc::format!("E(T) needs T >= 2, got {t}")));
    }
    let integral = integrate_mean_square_with(0.0, t, cfg, a, opts, exec)?;
    let main = main_term_form(t, cfg, a, form)?;
    Ok(ErrorTermValue { value: integral.value - main, integral, main })
}
