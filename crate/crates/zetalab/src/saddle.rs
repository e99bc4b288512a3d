//! Bench for the stationary-phase evaluations: the saddle term of
//! `int_a^b exp(i(T log((1+y)/y) + 2 pi k y)) / (y^alpha (1+y)^beta log^gamma((1+y)/y)) dy`,
//! the decay of the `[T, 2T]` integral with the `f'`-free phase, and the
//! `phi_alpha`-weighted integral with its `delta` term.
//!
//! Each comparison reports the quadrature value, the explicit term, every
//! term of the error budget and a verdict against `10 x budget`.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::quad::{integrate, Executor, QuadOptions, QuadratureResult};
use crate::special::arcsinh;
use crate::Complex64;

/// Audit constant multiplying every error budget.
pub const BUDGET_CONSTANT: f64 = 10.0;

/// Sign of the frequency term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sign {
    /// `+2 pi k y` (`+4 pi x sqrt n`): a stationary point exists.
    #[default]
    Plus,
    /// `k` replaced by `-k`: monotone phase, no explicit term.
    Minus,
}

impl Sign {
    fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Parameters of the exponential integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpIntegralSpec {
    /// Power of `y`.
    pub alpha: f64,
    /// Power of `1 + y`.
    pub beta: f64,
    /// Power of `log((1+y)/y)`.
    pub gamma: f64,
    /// Lower end.
    pub a_lo: f64,
    /// Upper end.
    pub b_hi: f64,
    /// Frequency `k`.
    pub k_freq: f64,
    /// Height `T`.
    pub t: f64,
    /// Sign of the frequency term.
    pub sign: Sign,
    /// Threshold `B` below which a minus-sign case also drops the exponential terms.
    pub small_k: f64,
}

const PARAM_MAX: f64 = 10.0;

impl ExpIntegralSpec {
    /// Spec with `gamma = 1`, `a = 0.01`, `b = max(T, 1/k, U - 1/2)` and `B = 1`.
    pub fn with_defaults(alpha: f64, beta: f64, k_freq: f64, t: f64, sign: Sign) -> Result<Self> {
        let mut s = Self { alpha, beta, gamma: 1.0, a_lo: 0.01, b_hi: 0.0, k_freq, t, sign, small_k: 1.0 };
        s.b_hi = s.b_min();
        s.validate()?;
        Ok(s)
    }

    /// `max(T, 1/k, -1/2 + sqrt(1/4 + T / 2 pi k))`.
    pub fn b_min(&self) -> f64 {
        self.t.max(1.0 / self.k_freq).max(saddle_u(self.t, self.k_freq) - 0.5)
    }

    /// Parameter ranges that every use needs.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma)] {
            if !(v > 0.0 && v <= PARAM_MAX) {
                return Err(Error::Config(format!("{name} must lie in (0, {PARAM_MAX}], got {v}")));
            }
        }
        if !((self.alpha - 1.0).abs() > 0.01) {
            return Err(Error::Config(format!("need |alpha - 1| > 0.01, got alpha = {}", self.alpha)));
        }
        if !(self.k_freq > 0.0 && self.k_freq.is_finite()) {
            return Err(Error::Config(format!("frequency k must be positive, got {}", self.k_freq)));
        }
        if !(self.t >= 0.0 && self.t.is_finite()) {
            return Err(Error::Config(format!("T must be finite and >= 0, got {}", self.t)));
        }
        if !(self.a_lo > 0.0 && self.b_hi > self.a_lo && self.b_hi.is_finite()) {
            return Err(Error::Config(format!("need 0 < a < b, got a = {}, b = {}", self.a_lo, self.b_hi)));
        }
        Ok(())
    }

    /// The extra hypotheses of the saddle comparison: `0 < a < 1/2`,
    /// `a < T / 8 pi k`, `T >= 1` and `b >= max(T, 1/k, U - 1/2)`.
    pub fn validate_saddle(&self) -> Result<()> {
        self.validate()?;
        if !(self.a_lo < 0.5) {
            return Err(Error::Config(format!("saddle comparison needs 0 < a < 1/2, got {}", self.a_lo)));
        }
        if !(self.t >= 1.0) {
            return Err(Error::Config(format!("saddle comparison needs T >= 1, got {}", self.t)));
        }
        if !(self.a_lo < self.t / (8.0 * PI * self.k_freq)) {
            return Err(Error::Config(format!(
                "saddle comparison needs a < T / 8 pi k = {}, got {}",
                self.t / (8.0 * PI * self.k_freq),
                self.a_lo
            )));
        }
        if !(self.b_hi >= self.b_min()) {
            return Err(Error::Config(format!("saddle comparison needs b >= {}, got {}", self.b_min(), self.b_hi)));
        }
        Ok(())
    }

    /// `|integrand(y)| = y^{-alpha} (1+y)^{-beta} log^{-gamma}((1+y)/y)`.
    pub fn modulus(&self, y: f64) -> f64 {
        y.powf(-self.alpha) * (1.0 + y).powf(-self.beta) * (1.0 / y).ln_1p().powf(-self.gamma)
    }

    /// `T log((1+y)/y) +- 2 pi k y`.
    pub fn phase(&self, y: f64) -> f64 {
        self.t * (1.0 / y).ln_1p() + self.sign.factor() * 2.0 * PI * self.k_freq * y
    }

    /// `-T / (y (1+y)) +- 2 pi k`.
    pub fn phase_derivative(&self, y: f64) -> f64 {
        -self.t / (y * (1.0 + y)) + self.sign.factor() * 2.0 * PI * self.k_freq
    }

    fn phase_curvature(&self, y: f64) -> f64 {
        self.t * (1.0 + 2.0 * y) / (y * y * (1.0 + y) * (1.0 + y))
    }
}

/// `U = sqrt(1/4 + T / 2 pi k)`.
pub fn saddle_u(t: f64, k: f64) -> f64 {
    (0.25 + t / (2.0 * PI * k)).sqrt()
}

/// `V = 2 arcsinh sqrt(pi k / 2T)`.
pub fn saddle_v(t: f64, k: f64) -> f64 {
    2.0 * arcsinh((PI * k / (2.0 * t)).sqrt())
}

/// Quadrature settings shared by the bench.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchOptions {
    /// Local panel width as a fraction of a phase radian.
    pub panel_scale: f64,
    /// Adaptive quadrature tolerances.
    pub quad: QuadOptions,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self { panel_scale: 1.0, quad: QuadOptions { abs_tol: 1e-10, rel_tol: 1e-10, ..QuadOptions::default() } }
    }
}

/// `int_a^b exp(i phase(y)) / (y^alpha (1+y)^beta log^gamma((1+y)/y)) dy` with
/// panels no wider than a radian of phase, a quarter of `y`, or the
/// stationary-phase scale.
pub fn exp_integral_lhs(spec: &ExpIntegralSpec, opts: &BenchOptions, exec: &dyn Executor) -> Result<QuadratureResult<Complex64>> {
    spec.validate()?;
    let s = *spec;
    let c = opts.panel_scale;
    let width = move |y: f64| {
        let rate = s.phase_derivative(y).abs() + s.phase_curvature(y).sqrt();
        c * (1.0 / rate).min(0.25 * y)
    };
    integrate(
        move |y: f64| {
            let (si, co) = s.phase(y).sin_cos();
            Ok(Complex64::new(co, si) * s.modulus(y))
        },
        s.a_lo,
        s.b_hi,
        &width,
        &opts.quad,
        exec,
    )
}

/// The explicit saddle term; `None` for the minus sign.
pub fn saddle_term(spec: &ExpIntegralSpec) -> Option<Complex64> {
    if spec.sign == Sign::Minus {
        return None;
    }
    let (t, k) = (spec.t, spec.k_freq);
    let u = saddle_u(t, k);
    let v = saddle_v(t, k);
    let ph = t * v + 2.0 * PI * k * u - PI * k + PI / 4.0;
    let den = 2.0 * k * PI.sqrt() * v.powf(spec.gamma) * u.sqrt() * (u - 0.5).powf(spec.alpha) * (u + 0.5).powf(spec.beta);
    let (si, co) = ph.sin_cos();
    Some(Complex64::new(co, si) * (t.sqrt() / den))
}

/// Error budget of the saddle comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddleBudget {
    /// `a^{1-alpha} / T`.
    pub lower_end: f64,
    /// `b^{gamma-alpha-beta} / k`.
    pub upper_end: f64,
    /// `R(T, k)`, absent for the minus sign with `k <= T`.
    pub remainder: Option<f64>,
    /// `true` when `R(T, k)` uses the `k >= T` branch.
    pub large_k_branch: bool,
    /// Minus sign with `k <= B`.
    pub small_k_minus: bool,
}

impl SaddleBudget {
    /// Sum of the present terms.
    pub fn total(&self) -> f64 {
        self.lower_end + self.upper_end + self.remainder.unwrap_or(0.0)
    }
}

/// `R(T, k)`: `T^{(g-a-b)/2 - 1/4} k^{-(g-a-b)/2 - 5/4}` for `k <= T`,
/// `T^{-1/2-alpha} k^{alpha-1}` otherwise. The second value flags the branch.
pub fn saddle_remainder(spec: &ExpIntegralSpec) -> (f64, bool) {
    let (t, k) = (spec.t, spec.k_freq);
    let e = spec.gamma - spec.alpha - spec.beta;
    if k <= t {
        (t.powf(0.5 * e - 0.25) * k.powf(-0.5 * e - 1.25), false)
    } else {
        (t.powf(-0.5 - spec.alpha) * k.powf(spec.alpha - 1.0), true)
    }
}

/// Evaluate the budget. The exponentially small terms are absorbed for
/// `k >= 1` and not listed.
pub fn saddle_budget(spec: &ExpIntegralSpec) -> SaddleBudget {
    let lower_end = spec.a_lo.powf(1.0 - spec.alpha) / spec.t;
    let upper_end = spec.b_hi.powf(spec.gamma - spec.alpha - spec.beta) / spec.k_freq;
    let (r, large) = saddle_remainder(spec);
    let remainder = match spec.sign {
        Sign::Plus => Some(r),
        Sign::Minus if large => Some(r),
        Sign::Minus => None,
    };
    SaddleBudget {
        lower_end,
        upper_end,
        remainder,
        large_k_branch: large,
        small_k_minus: spec.sign == Sign::Minus && spec.k_freq <= spec.small_k,
    }
}

/// Saddle comparison result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma2Report {
    /// Inputs.
    pub spec: ExpIntegralSpec,
    /// Quadrature of the integral.
    pub lhs: QuadratureResult<Complex64>,
    /// Explicit term (zero for the minus sign).
    pub explicit: Complex64,
    /// `|lhs - explicit|`.
    pub difference: f64,
    /// Budget breakdown.
    pub budget: SaddleBudget,
    /// `difference <= 10 x budget`.
    pub pass: bool,
}

/// Quadrature versus saddle term.
pub fn lemma2_compare(spec: &ExpIntegralSpec, opts: &BenchOptions, exec: &dyn Executor) -> Result<Lemma2Report> {
    spec.validate_saddle()?;
    let lhs = exp_integral_lhs(spec, opts, exec)?;
    let explicit = saddle_term(spec).unwrap_or(Complex64::new(0.0, 0.0));
    let difference = (lhs.value - explicit).norm();
    let budget = saddle_budget(spec);
    Ok(Lemma2Report { spec: *spec, lhs, explicit, difference, budget, pass: difference <= BUDGET_CONSTANT * budget.total() })
}

/// `x^{-alpha} arcsinh^{-1}(sqrt(pi k / 2x)) (1/4 + x / 2 pi k)^{-1/4}`.
pub fn decay_modulus(alpha: f64, k: f64, x: f64) -> f64 {
    x.powf(-alpha) / arcsinh((PI * k / (2.0 * x)).sqrt()) * (0.25 + x / (2.0 * PI * k)).powf(-0.25)
}

/// `2x arcsinh sqrt(pi k / 2x) + 2 pi k sqrt(1/4 + x / 2 pi k) - pi k + pi/4`.
pub fn decay_phase(k: f64, x: f64) -> f64 {
    2.0 * x * arcsinh((PI * k / (2.0 * x)).sqrt()) + 2.0 * PI * k * (0.25 + x / (2.0 * PI * k)).sqrt() - PI * k + PI / 4.0
}

/// The derivative of `f = -decay_phase` in its three-term form
/// `-2 arcsinh sqrt(pi k/2x) + sqrt(pi k)/sqrt(pi k + 2x) - (1/4 + x/2 pi k)^{-1/2} / 2`.
pub fn decay_phase_derivative(k: f64, x: f64) -> f64 {
    -2.0 * arcsinh((PI * k / (2.0 * x)).sqrt()) + (PI * k).sqrt() / (PI * k + 2.0 * x).sqrt()
        - 0.5 / (0.25 + x / (2.0 * PI * k)).sqrt()
}

/// One row of the decay table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayRow {
    /// Lower end `T` of `[T, 2T]`.
    pub t: f64,
    /// Quadrature of the integral.
    pub integral: QuadratureResult<Complex64>,
    /// `|integral| / T^{3/4 - alpha}`.
    pub ratio: f64,
}

/// Decay table and verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma3Report {
    /// Weight exponent.
    pub alpha: f64,
    /// Frequency.
    pub k: f64,
    /// One row per `T`.
    pub rows: Vec<DecayRow>,
    /// Largest over smallest ratio.
    pub max_over_min: f64,
    /// `max_over_min <= 20`.
    pub pass: bool,
}

/// Spread allowed in the decay table.
pub const DECAY_SPREAD: f64 = 20.0;

/// Integrate `exp(-i decay_phase) decay_modulus` over `[T, 2T]` for each `T`.
pub fn lemma3_decay(alpha: f64, k: f64, t_grid: &[f64], opts: &BenchOptions, exec: &dyn Executor) -> Result<Lemma3Report> {
    if !(alpha > 0.0 && k > 0.0) || t_grid.is_empty() {
        return Err(Error::Config(format!("decay table needs alpha > 0, k > 0 and a T grid, got alpha = {alpha}, k = {k}")));
    }
    for w in t_grid.windows(2) {
        if w[1] != 2.0 * w[0] {
            return Err(Error::Config(format!("decay grid must double, got {} then {}", w[0], w[1])));
        }
    }
    let mut rows = Vec::new();
    for &t in t_grid {
        if !(t >= 10.0) {
            return Err(Error::Config(format!("decay grid needs T >= 10, got {t}")));
        }
        let c = opts.panel_scale;
        let width = move |x: f64| c * (x / 8.0).min(1.0 / decay_phase_derivative(k, x).abs().max(1e-300));
        let integral = integrate(
            move |x: f64| {
                let (s, co) = (-decay_phase(k, x)).sin_cos();
                Ok(Complex64::new(co, s) * decay_modulus(alpha, k, x))
            },
            t,
            2.0 * t,
            &width,
            &opts.quad,
            exec,
        )?;
        rows.push(DecayRow { t, integral, ratio: integral.value.norm() / t.powf(0.75 - alpha) });
    }
    let mx = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    let mn = rows.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    let max_over_min = mx / mn;
    Ok(Lemma3Report { alpha, k, rows, max_over_min, pass: max_over_min <= DECAY_SPREAD })
}

/// `phi_alpha(T, x) = x^{-alpha} arcsinh^{-1}(x sqrt(pi/2T)) (sqrt(T/2 pi x^2 + 1/4) + 1/2)^{-1} (T/2 pi x^2 + 1/4)^{-1/4}`.
pub fn phi_weight(alpha: f64, t: f64, x: f64) -> f64 {
    let q = t / (2.0 * PI * x * x) + 0.25;
    x.powf(-alpha) / arcsinh(x * (PI / (2.0 * t)).sqrt()) / (q.sqrt() + 0.5) * q.powf(-0.25)
}

/// Constant inside `log(T / c pi n)` of the explicit phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogPhase {
    /// `c = 2`, matching `g(T, n)`.
    #[default]
    TwoPi,
    /// `c = 3`.
    ThreePi,
}

impl LogPhase {
    fn constant(self) -> f64 {
        match self {
            LogPhase::TwoPi => 2.0 * PI,
            LogPhase::ThreePi => 3.0 * PI,
        }
    }
}

/// Parameters of the `phi_alpha` integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma4Spec {
    /// Weight exponent of `phi_alpha`.
    pub alpha: f64,
    /// Frequency index.
    pub n: u64,
    /// Lower end.
    pub a_lo: f64,
    /// Upper end.
    pub b_hi: f64,
    /// Height.
    pub t: f64,
    /// Sign of `4 pi x sqrt n`.
    pub sign: Sign,
    /// Explicit-phase constant.
    pub phase: LogPhase,
    /// `(A, B)` with `A sqrt T < a < B sqrt T`.
    pub sqrt_window: (f64, f64),
}

impl Lemma4Spec {
    /// Spec with `a = sqrt T`, `b = 10 sqrt T`, plus sign, `2 pi` phase and window `(1/2, 2)`.
    pub fn with_defaults(alpha: f64, n: u64, t: f64) -> Result<Self> {
        let s = Self {
            alpha,
            n,
            a_lo: t.sqrt(),
            b_hi: 10.0 * t.sqrt(),
            t,
            sign: Sign::Plus,
            phase: LogPhase::TwoPi,
            sqrt_window: (0.5, 2.0),
        };
        s.validate()?;
        Ok(s)
    }

    /// Check ranges and `A sqrt T < a < B sqrt T`.
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= PARAM_MAX) {
            return Err(Error::Config(format!("alpha must lie in (0, {PARAM_MAX}], got {}", self.alpha)));
        }
        if self.n == 0 {
            return Err(Error::Config("n must be positive".into()));
        }
        if !(self.t > 0.0 && self.t.is_finite()) {
            return Err(Error::Config(format!("T must be positive, got {}", self.t)));
        }
        let (lo, hi) = self.sqrt_window;
        let r = self.t.sqrt();
        if !(0.0 < lo && lo < hi && lo * r < self.a_lo && self.a_lo < hi * r) {
            return Err(Error::Config(format!(
                "need A sqrt T < a < B sqrt T, got a = {} with bounds ({}, {})",
                self.a_lo,
                lo * r,
                hi * r
            )));
        }
        if !(self.b_hi > self.a_lo && self.b_hi.is_finite()) {
            return Err(Error::Config(format!("need b > a, got a = {}, b = {}", self.a_lo, self.b_hi)));
        }
        Ok(())
    }

    /// `+-4 pi x sqrt n - 2T arcsinh(x sqrt(pi/2T)) - sqrt(2 pi x^2 T + pi^2 x^4) + pi x^2`.
    pub fn phase_at(&self, x: f64) -> f64 {
        let t = self.t;
        let sn = (self.n as f64).sqrt();
        self.sign.factor() * 4.0 * PI * x * sn
            - 2.0 * t * arcsinh(x * (PI / (2.0 * t)).sqrt())
            - (2.0 * PI * x * x * t + PI * PI * x.powi(4)).sqrt()
            + PI * x * x
    }

    /// Derivative of [`Self::phase_at`].
    pub fn phase_derivative(&self, x: f64) -> f64 {
        let t = self.t;
        let c = (PI / (2.0 * t)).sqrt();
        let sn = (self.n as f64).sqrt();
        self.sign.factor() * 4.0 * PI * sn
            - 2.0 * t * c / (1.0 + c * c * x * x).sqrt()
            - (2.0 * PI * t + 2.0 * PI * PI * x * x) / (2.0 * PI * t + PI * PI * x * x).sqrt()
            + 2.0 * PI * x
    }
}

/// `delta = 1` iff `n <= T/2pi`, `n a^2 <= (T/2pi - n)^2 <= n b^2` and the sign is `+`.
pub fn lemma4_delta(n: u64, t: f64, a: f64, b: f64, sign: Sign) -> bool {
    let nf = n as f64;
    let q = t / (2.0 * PI) - nf;
    let q2 = q * q;
    sign == Sign::Plus && q >= 0.0 && nf * a * a <= q2 && q2 <= nf * b * b
}

/// Explicit term `4 pi T^{-1} n^{(alpha-1)/2} log^{-1}(T/2pi n) (T/2pi - n)^{3/2-alpha}
/// exp(i(T - T log(T / c pi n) - 2 pi n + pi/4))`, without the `delta` factor.
pub fn lemma4_explicit(spec: &Lemma4Spec, phase: LogPhase) -> Result<Complex64> {
    let (t, nf, al) = (spec.t, spec.n as f64, spec.alpha);
    let q = t / (2.0 * PI) - nf;
    if !(q > 0.0) {
        return Err(Error::Domain(format!("explicit term needs n < T/2pi, got n = {nf}, T = {t}")));
    }
    let amp = 4.0 * PI / t * nf.powf(0.5 * (al - 1.0)) / (t / (2.0 * PI * nf)).ln() * q.powf(1.5 - al);
    let ph = t - t * (t / (phase.constant() * nf)).ln() - 2.0 * PI * nf + PI / 4.0;
    let (s, c) = ph.sin_cos();
    Ok(Complex64::new(c, s) * amp)
}

/// Budget of the `phi_alpha` comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma4Budget {
    /// `delta n^{(alpha-1)/2} (T/2pi - n)^{1-alpha} T^{-3/2}`.
    pub saddle: f64,
    /// `T^{-alpha/2} min(1, |a - (a^2 + 2T/pi)^{1/2} +- 2 sqrt n|^{-1})`.
    pub lower_end: f64,
    /// `b^{-alpha} (sqrt n + T/b)^{-1}`.
    pub upper_end: f64,
}

impl Lemma4Budget {
    /// Sum of the terms.
    pub fn total(&self) -> f64 {
        self.saddle + self.lower_end + self.upper_end
    }
}

/// Evaluate the budget.
pub fn lemma4_budget(spec: &Lemma4Spec, delta: bool) -> Lemma4Budget {
    let (t, nf, al, a, b) = (spec.t, spec.n as f64, spec.alpha, spec.a_lo, spec.b_hi);
    let q = t / (2.0 * PI) - nf;
    let saddle = if delta { nf.powf(0.5 * (al - 1.0)) * q.powf(1.0 - al) * t.powf(-1.5) } else { 0.0 };
    let gap = (a - (a * a + 2.0 * t / PI).sqrt() + spec.sign.factor() * 2.0 * nf.sqrt()).abs();
    let lower_end = t.powf(-0.5 * al) * (1.0f64).min(1.0 / gap);
    let upper_end = b.powf(-al) / (nf.sqrt() + t / b);
    Lemma4Budget { saddle, lower_end, upper_end }
}

/// `phi_alpha` comparison result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma4Report {
    /// Inputs.
    pub spec: Lemma4Spec,
    /// Quadrature of the integral.
    pub lhs: QuadratureResult<Complex64>,
    /// `delta` predicate.
    pub delta: bool,
    /// `delta x` explicit term under `spec.phase`.
    pub explicit: Complex64,
    /// `|lhs - explicit|`.
    pub difference: f64,
    /// `|lhs - explicit|` under the other phase constant.
    pub alternate_difference: f64,
    /// Budget breakdown.
    pub budget: Lemma4Budget,
    /// `difference <= 10 x budget`.
    pub pass: bool,
}

/// Quadrature of the `phi_alpha` integral versus its explicit `delta` term.
pub fn lemma4_compare(spec: &Lemma4Spec, opts: &BenchOptions, exec: &dyn Executor) -> Result<Lemma4Report> {
    spec.validate()?;
    let s = *spec;
    let c = opts.panel_scale;
    let width = move |x: f64| c * (0.25 * x).min(1.0 / s.phase_derivative(x).abs().max(1e-300));
    let lhs = integrate(
        move |x: f64| {
            let (si, co) = s.phase_at(x).sin_cos();
            Ok(Complex64::new(co, si) * phi_weight(s.alpha, s.t, x))
        },
        s.a_lo,
        s.b_hi,
        &width,
        &opts.quad,
        exec,
    )?;
    let delta = lemma4_delta(s.n, s.t, s.a_lo, s.b_hi, s.sign);
    let other = match s.phase {
        LogPhase::TwoPi => LogPhase::ThreePi,
        LogPhase::ThreePi => LogPhase::TwoPi,
    };
    let zero = Complex64::new(0.0, 0.0);
    let (explicit, alt) = if delta { (lemma4_explicit(&s, s.phase)?, lemma4_explicit(&s, other)?) } else { (zero, zero) };
    let difference = (lhs.value - explicit).norm();
    let budget = lemma4_budget(&s, delta);
    Ok(Lemma4Report {
        spec: s,
        lhs,
        delta,
        explicit,
        difference,
        alternate_difference: (lhs.value - alt).norm(),
        budget,
        pass: difference <= BUDGET_CONSTANT * budget.total(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_and_v() {
        let t = 2.0 * PI;
        assert!((saddle_u(t, 1.0) - 1.118_033_988_749_895).abs() < 1e-15);
        assert!((saddle_v(t, 1.0) - 0.962_423_650_119_206_9).abs() < 1e-15);
        for (t, k) in [(100.0, 1.0), (400.0, 5.0), (3.0, 0.2)] {
            let u = saddle_u(t, k);
            assert!((u * u - 0.25 - t / (2.0 * PI * k)).abs() < 1e-12 * u * u);
        }
    }

    #[test]
    fn budget_arithmetic() {
        let s = ExpIntegralSpec {
            alpha: 0.6,
            beta: 0.6,
            gamma: 1.0,
            a_lo: 0.01,
            b_hi: 200.0,
            k_freq: 1.0,
            t: 100.0,
            sign: Sign::Plus,
            small_k: 1.0,
        };
        let b = saddle_budget(&s);
        assert!((b.lower_end - 0.001_584_893_192_461_113_5).abs() < 1e-17);
        assert!((b.upper_end - 0.346_572_421_577_573_2).abs() < 1e-15);
        assert!((b.remainder.unwrap() - 0.199_526_231_496_887_96).abs() < 1e-15);
    }

    #[test]
    fn remainder_branches() {
        let mut s = ExpIntegralSpec::with_defaults(0.6, 0.6, 1.0, 100.0, Sign::Plus).unwrap();
        assert!(!saddle_remainder(&s).1);
        s.k_freq = 200.0;
        let (r, large) = saddle_remainder(&s);
        assert!(large);
        assert!((r - 100f64.powf(-1.1) * 200f64.powf(-0.4)).abs() < 1e-18);
        s.sign = Sign::Minus;
        assert!(saddle_budget(&s).remainder.is_some());
        s.k_freq = 1.0;
        assert!(saddle_budget(&s).remainder.is_none());
        assert!(saddle_budget(&s).small_k_minus);
    }

    #[test]
    fn delta_boundary() {
        let t = 300.0;
        let n = 4;
        let q = t / (2.0 * PI) - 4.0;
        let a = q / 2.0;
        assert_eq!(4.0 * a * a, q * q);
        assert!(lemma4_delta(n, t, a, 10.0 * a, Sign::Plus));
        assert!(!lemma4_delta(n, t, a * (1.0 + 1e-15), 10.0 * a, Sign::Plus));
        assert!(!lemma4_delta(n, t, a, 10.0 * a, Sign::Minus));
        assert!(!lemma4_delta(60, t, 1.0, 1e3, Sign::Plus));
    }
}
