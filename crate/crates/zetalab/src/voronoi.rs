//! Twisted divisor sums `D_a(x; h/k) = sum'_{n <= x} sigma_a(n) e(hn/k)` and
//! their Voronoi analysis for `-1/2 < a < 0`.
//!
//! Exponent convention: a single signed exponent `a` is stored, so
//! `sigma_a(n)` here is `sigma_{-a'}(n)` in the `0 < a' < 1/2` convention of
//! the smooth main terms (`a' = -a`) and `sigma_{2 sigma - 1}(n)` in the strip
//! convention (`a = 2 sigma - 1`).
//!
//! The decomposition is
//! `D_a(x) = k^{a-1} zeta(1-a) x + k^p zeta(1+a) x^{1+a} / (1+a) + C0 + Delta_a(x)`
//! with the modulus exponent `p` a configurable slot; `C0` is fitted.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::{PI, SQRT_2};

#[allow(unused_imports)]
use num_traits::Float;

use crate::arithmetic::{divisor_sigma, gcd, mod_inverse, SigmaTable};
use crate::error::{Error, Result};
use crate::quad::{gauss10, integrate, QuadOptions, QuadratureResult, Serial};
use crate::special::{bessel, zeta, BesselKind};
use crate::sum::{ComplexNeumaier, Neumaier};
use crate::Complex64;

/// Exponent, residue and modulus of a twisted divisor sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistedSumSpec {
    /// Divisor exponent, `-1/2 < a < 0`.
    pub a: f64,
    /// Residue, `0 <= h < k_mod`, coprime to `k_mod` when nonzero.
    pub h: u64,
    /// Modulus.
    pub k_mod: u64,
}

impl TwistedSumSpec {
    /// Validated spec.
    pub fn new(a: f64, h: u64, k_mod: u64) -> Result<Self> {
        let s = Self { a, h, k_mod };
        s.validate()?;
        Ok(s)
    }

    /// Spec with `a = 2 sigma - 1`.
    pub fn from_sigma(sigma: f64, h: u64, k_mod: u64) -> Result<Self> {
        Self::new(2.0 * sigma - 1.0, h, k_mod)
    }

    /// Check `-1/2 < a < 0`, `0 <= h < k_mod` and `gcd(h, k_mod) = 1` for `h != 0`.
    pub fn validate(&self) -> Result<()> {
        if !(self.a > -0.5 && self.a < 0.0) {
            return Err(Error::Config(format!("exponent a must satisfy -1/2 < a < 0, got {}", self.a)));
        }
        if self.k_mod == 0 || self.h >= self.k_mod {
            return Err(Error::Config(format!("need 0 <= h < k_mod, got h = {}, k_mod = {}", self.h, self.k_mod)));
        }
        if self.h != 0 && gcd(self.h, self.k_mod) != 1 {
            return Err(Error::Config(format!("h = {} is not coprime to k_mod = {}", self.h, self.k_mod)));
        }
        Ok(())
    }

    /// `sigma = (1 + a) / 2`.
    pub fn sigma(&self) -> f64 {
        0.5 * (1.0 + self.a)
    }

    /// The exponent in the `sigma_{-a'}` convention, `a' = -a`.
    pub fn positive_exponent(&self) -> f64 {
        -self.a
    }

    /// `h_bar` with `h h_bar = 1 (mod k_mod)`; 0 when `k_mod = 1`.
    pub fn h_inverse(&self) -> u64 {
        mod_inverse(self.h, self.k_mod).unwrap_or(0)
    }
}

/// `e(r / k)` with `r` reduced mod `k`; the upper half of the residues is the
/// conjugate of the lower half, so `e(-r/k)` is exactly `conj(e(r/k))`.
pub fn e_ratio(r: u64, k: u64) -> Complex64 {
    let r = r % k;
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * r > k {
        return e_ratio(k - r, k).conj();
    }
    if 2 * r == k {
        return Complex64::new(-1.0, 0.0);
    }
    let (s, c) = (2.0 * PI * r as f64 / k as f64).sin_cos();
    Complex64::new(c, s)
}

fn e_neg_ratio(r: u64, k: u64) -> Complex64 {
    e_ratio(r, k).conj()
}

/// `sum'_{n <= x} sigma_a(n) e(hn/k)` for any real `a`, the last term halved at
/// integer `x`. Direct summation.
pub fn divisor_sum(a: f64, h: u64, k_mod: u64, x: f64) -> Result<Complex64> {
    if !(x.is_finite() && x >= 0.0) || k_mod == 0 {
        return Err(Error::Domain(format!("divisor sum needs finite x >= 0 and k_mod > 0, got x = {x}")));
    }
    let m = x.floor() as u64;
    let mut acc = ComplexNeumaier::new();
    for n in 1..=m {
        let mut t = e_ratio(h * n % k_mod, k_mod) * divisor_sigma(a, n);
        if n == m && x == m as f64 {
            t *= 0.5;
        }
        acc.add(t);
    }
    Ok(acc.total())
}

/// [`divisor_sum`] for a validated spec.
pub fn twisted_sum(spec: &TwistedSumSpec, x: f64) -> Result<Complex64> {
    spec.validate()?;
    divisor_sum(spec.a, spec.h, spec.k_mod, x)
}

/// Modulus exponent of the `x^{1+a}` main term.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum PowerModulus {
    /// `k^{1-a}`, i.e. `k^{1+a'}` in the positive convention.
    #[default]
    Printed,
    /// `k^{-1-a}`, the exponent the `k = 1` analogy and the Estermann poles give.
    Derived,
    /// Any fixed exponent.
    Custom(f64),
}

impl PowerModulus {
    /// The exponent of `k` for module exponent `a`.
    pub fn exponent(&self, a: f64) -> f64 {
        match *self {
            PowerModulus::Printed => 1.0 - a,
            PowerModulus::Derived => -1.0 - a,
            PowerModulus::Custom(p) => p,
        }
    }
}

/// Residue class in the additive twist of the Bessel series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DualTwist {
    /// `e(-hn/k)`.
    #[default]
    AsPrinted,
    /// `e(-h_bar n/k)`.
    Inverse,
}

/// Weight of `Y_{1+a}` inside the bracket `[K + w Y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum YWeight {
    /// `w = pi/2`, reading `1/2 pi` as `(1/2) pi`.
    #[default]
    HalfPi,
    /// `w = 1 / (2 pi)`.
    InverseTwoPi,
}

impl YWeight {
    fn value(self) -> f64 {
        match self {
            YWeight::HalfPi => PI / 2.0,
            YWeight::InverseTwoPi => 1.0 / (2.0 * PI),
        }
    }
}

/// Coefficient of the sine correction in the cosine form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SineCorrection {
    /// `(16 sigma^2 - 1)`, the second Hankel coefficient `4 nu^2 - 1`.
    #[default]
    Hankel,
    /// `((16 sigma^2 - 1) - 1)`.
    ShiftedByOne,
}

/// Model switches and the calibration window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoronoiOptions {
    /// Modulus exponent of the power main term.
    pub power_modulus: PowerModulus,
    /// Twist class of the dual series.
    pub dual_twist: DualTwist,
    /// `Y` weight in the Bessel bracket.
    pub y_weight: YWeight,
    /// Sine coefficient of the cosine form.
    pub sine_correction: SineCorrection,
    /// Calibration window `[X0, 4 X0]`.
    pub calibration_x0: f64,
}

impl Default for VoronoiOptions {
    fn default() -> Self {
        Self {
            power_modulus: PowerModulus::Printed,
            dual_twist: DualTwist::AsPrinted,
            y_weight: YWeight::HalfPi,
            sine_correction: SineCorrection::Hankel,
            calibration_x0: 1000.0,
        }
    }
}

/// Linear and power main terms at `x`.
pub fn voronoi_main(spec: &TwistedSumSpec, x: f64, slot: PowerModulus) -> Result<(f64, f64)> {
    spec.validate()?;
    let a = spec.a;
    let zl = zeta(Complex64::new(1.0 - a, 0.0))?.re;
    let zp = zeta(Complex64::new(1.0 + a, 0.0))?.re;
    Ok(main_pair(spec, slot, zl, zp, x))
}

fn main_pair(spec: &TwistedSumSpec, slot: PowerModulus, zl: f64, zp: f64, x: f64) -> (f64, f64) {
    let a = spec.a;
    let k = spec.k_mod as f64;
    (k.powf(a - 1.0) * zl * x, k.powf(slot.exponent(a)) * zp * x.powf(1.0 + a) / (1.0 + a))
}

/// Fitted constant term and its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Calibration {
    /// Window start; the fit runs over `[X0, 4 X0]`.
    pub x0: f64,
    /// Fitted constant.
    pub c0: Complex64,
    /// Disagreement of the fits on the two halves of the window.
    pub standard_error: f64,
    /// Weighted RMS of the oscillation left after removing `c0`.
    pub oscillation_rms: f64,
    /// Fit on the lower half of the window.
    pub lower_fit: Complex64,
    /// Fit on the upper half of the window.
    pub upper_fit: Complex64,
}

impl Calibration {
    /// `standard_error <= oscillation_rms / 10`.
    pub fn passes(&self) -> bool {
        self.standard_error <= 0.1 * self.oscillation_rms
    }
}

/// Number of Bessel terms and the expected size of what was cut off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPlan {
    /// Terms kept.
    pub n_terms: usize,
    /// Tail estimate at the top of `x_range`.
    pub tail_estimate: f64,
    /// Range of `x` the plan is meant for.
    pub x_range: (f64, f64),
}

/// A truncated series and its tail estimate at the evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    /// Partial sum.
    pub value: Complex64,
    /// Terms summed.
    pub terms: usize,
    /// Estimated size of the omitted tail at this `x`.
    pub tail_estimate: f64,
}

/// Calibrated twisted-sum model. Built once, immutable afterwards.
#[derive(Debug, Clone)]
pub struct VoronoiModel {
    spec: TwistedSumSpec,
    opts: VoronoiOptions,
    x_max: f64,
    sigma: SigmaTable,
    prefix: Vec<Complex64>,
    zeta_lin: f64,
    zeta_pow: f64,
    calibration: Calibration,
}

const MIN_TABLE: usize = 8192;

impl VoronoiModel {
    /// Tabulate sums up to `max(x_max, 4 X0)` and fit `C0`. A failing fit is
    /// kept and reported; [`Self::delta_direct`] then returns
    /// [`Error::Calibration`].
    pub fn new(spec: TwistedSumSpec, opts: VoronoiOptions, x_max: f64) -> Result<Self> {
        spec.validate()?;
        if !(opts.calibration_x0 >= 4.0 && opts.calibration_x0.is_finite()) {
            return Err(Error::Config(format!("calibration X0 must be >= 4, got {}", opts.calibration_x0)));
        }
        if !(x_max.is_finite() && x_max >= 1.0) {
            return Err(Error::Config(format!("x_max must be finite and >= 1, got {x_max}")));
        }
        let x_max = x_max.max(4.0 * opts.calibration_x0);
        let n_max = (x_max.floor() as usize + 1).max(MIN_TABLE);
        let sigma = SigmaTable::new(spec.a, n_max);
        let mut prefix = Vec::with_capacity(n_max + 1);
        let mut acc = ComplexNeumaier::new();
        prefix.push(Complex64::new(0.0, 0.0));
        for n in 1..=n_max as u64 {
            acc.add(e_ratio(spec.h * n % spec.k_mod, spec.k_mod) * sigma.get(n));
            prefix.push(acc.total());
        }
        let zeta_lin = zeta(Complex64::new(1.0 - spec.a, 0.0))?.re;
        let zeta_pow = zeta(Complex64::new(1.0 + spec.a, 0.0))?.re;
        let mut m = Self {
            spec,
            opts,
            x_max,
            sigma,
            prefix,
            zeta_lin,
            zeta_pow,
            calibration: Calibration {
                x0: opts.calibration_x0,
                c0: Complex64::new(0.0, 0.0),
                standard_error: 0.0,
                oscillation_rms: 0.0,
                lower_fit: Complex64::new(0.0, 0.0),
                upper_fit: Complex64::new(0.0, 0.0),
            },
        };
        m.calibration = m.calibrate();
        Ok(m)
    }

    /// The spec.
    pub fn spec(&self) -> &TwistedSumSpec {
        &self.spec
    }

    /// The options.
    pub fn options(&self) -> &VoronoiOptions {
        &self.opts
    }

    /// The fit.
    pub fn calibration(&self) -> &Calibration {
        &self.calibration
    }

    /// Largest tabulated `x`.
    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    fn term(&self, n: u64) -> Complex64 {
        e_ratio(self.spec.h * n % self.spec.k_mod, self.spec.k_mod) * self.sigma.get(n)
    }

    /// Tabulated twisted sum with the halving convention.
    pub fn twisted_sum(&self, x: f64) -> Result<Complex64> {
        if !(x >= 0.0 && x <= self.x_max) {
            return Err(Error::Domain(format!("x = {x} outside the tabulated range [0, {}]", self.x_max)));
        }
        let m = x.floor() as u64;
        let mut v = self.prefix[m as usize];
        if m >= 1 && x == m as f64 {
            v -= self.term(m) * 0.5;
        }
        Ok(v)
    }

    /// `(linear, power)` main terms at `x` under the model's slot.
    pub fn main(&self, x: f64) -> (f64, f64) {
        main_pair(&self.spec, self.opts.power_modulus, self.zeta_lin, self.zeta_pow, x)
    }

    fn smooth(&self, x: f64) -> f64 {
        let (l, p) = self.main(x);
        l + p
    }

    fn bump(lo: f64, hi: f64, u: f64) -> f64 {
        let s = (2.0 * u - lo - hi) / (hi - lo);
        if s.abs() >= 1.0 {
            0.0
        } else {
            (-1.0 / (1.0 - s * s)).exp()
        }
    }

    /// Breakpoints `sqrt(m)` strictly inside `(lo, hi)` with the ends.
    fn segments(lo: f64, hi: f64) -> Vec<f64> {
        let mut out = alloc::vec![lo];
        let m0 = (lo * lo).ceil() as u64;
        let m1 = (hi * hi).floor() as u64;
        for m in m0..=m1 {
            let r = (m as f64).sqrt();
            if r > lo && r < hi {
                out.push(r);
            }
        }
        out.push(hi);
        out
    }

    /// Bump-weighted mean of `D - main` in `u = sqrt(x)` over `[lo, hi]`,
    /// integrated piecewise between the jumps of `D`.
    fn bump_mean(&self, lo: f64, hi: f64) -> Complex64 {
        let br = Self::segments(lo, hi);
        let mut num = ComplexNeumaier::new();
        let mut den = Neumaier::new();
        for w in br.windows(2) {
            let (p, q) = (w[0], w[1]);
            let mid = 0.5 * (p + q);
            let step = self.prefix[(mid * mid).floor() as usize];
            let wt = gauss10(|u| Complex64::new(Self::bump(lo, hi, u), 0.0), p, q).re;
            let wm = gauss10(|u| Complex64::new(Self::bump(lo, hi, u) * self.smooth(u * u), 0.0), p, q).re;
            num.add(step * wt - wm);
            den.add(wt);
        }
        num.total() / den.total()
    }

    fn bump_rms(&self, lo: f64, hi: f64, c0: Complex64) -> f64 {
        let br = Self::segments(lo, hi);
        let mut num = Neumaier::new();
        let mut den = Neumaier::new();
        for w in br.windows(2) {
            let (p, q) = (w[0], w[1]);
            let mid = 0.5 * (p + q);
            let step = self.prefix[(mid * mid).floor() as usize] - c0;
            let f = |u: f64| {
                let r = step - self.smooth(u * u);
                Complex64::new(Self::bump(lo, hi, u) * r.norm_sqr(), 0.0)
            };
            num.add(gauss10(f, p, q).re);
            den.add(gauss10(|u| Complex64::new(Self::bump(lo, hi, u), 0.0), p, q).re);
        }
        (num.total() / den.total()).sqrt()
    }

    fn calibrate(&self) -> Calibration {
        let x0 = self.opts.calibration_x0;
        let (u0, u1) = (x0.sqrt(), 2.0 * x0.sqrt());
        let um = 0.5 * (u0 + u1);
        let c0 = self.bump_mean(u0, u1);
        let lower_fit = self.bump_mean(u0, um);
        let upper_fit = self.bump_mean(um, u1);
        Calibration {
            x0,
            c0,
            standard_error: (lower_fit - upper_fit).norm(),
            oscillation_rms: self.bump_rms(u0, u1, c0),
            lower_fit,
            upper_fit,
        }
    }

    fn require_calibrated(&self) -> Result<()> {
        let c = &self.calibration;
        if !c.passes() {
            return Err(Error::Calibration(format!(
                "constant fit over [{}, {}] drifts by {:e}, above 10% of the oscillation RMS {:e}",
                c.x0,
                4.0 * c.x0,
                c.standard_error,
                c.oscillation_rms
            )));
        }
        Ok(())
    }

    /// `D(x) - main(x) - C0`.
    pub fn delta_direct(&self, x: f64) -> Result<Complex64> {
        self.require_calibrated()?;
        if x < 1.0 {
            return Err(Error::Domain(format!("Delta needs x >= 1, got {x}")));
        }
        Ok(self.twisted_sum(x)? - self.smooth(x) - self.calibration.c0)
    }

    fn dual_class(&self) -> u64 {
        match self.opts.dual_twist {
            DualTwist::AsPrinted => self.spec.h,
            DualTwist::Inverse => self.spec.h_inverse(),
        }
    }

    fn sigma_for(&self, n_terms: usize) -> Option<SigmaTable> {
        if n_terms > self.sigma.n_max() {
            Some(SigmaTable::new(self.spec.a, n_terms))
        } else {
            None
        }
    }

    /// Random-phase size of the series tail beyond `n_terms` at `x`:
    /// the large-argument envelope of the last kept term times
    /// `sqrt(sum_{n > N} n^{-3/2 - a}) / N^{-3/4 - a/2}` and the mean of
    /// `sigma_a` over `(N/2, N]`.
    pub fn tail_estimate(&self, x: f64, n_terms: usize) -> f64 {
        let a = self.spec.a;
        let n = n_terms.max(1);
        let own;
        let table = match self.sigma_for(n) {
            Some(t) => {
                own = t;
                &own
            }
            None => &self.sigma,
        };
        let lo = n / 2 + 1;
        let mut acc = Neumaier::new();
        for m in lo..=n {
            acc.add(table.get(m as u64));
        }
        let sb = acc.total() / (n - lo + 1) as f64;
        let nf = n as f64;
        let k = self.spec.k_mod as f64;
        let env = k.sqrt() / (PI * SQRT_2) * x.powf(0.25 + 0.5 * a) * nf.powf(-0.75 - 0.5 * a);
        env * sb * (nf / (0.5 + a)).sqrt()
    }

    /// Plan for `n_terms` over `x_range`; the tail is evaluated at the top.
    pub fn truncation_plan(&self, n_terms: usize, x_range: (f64, f64)) -> Result<TruncationPlan> {
        if !(x_range.0 >= 1.0 && x_range.1 >= x_range.0) {
            return Err(Error::Config(format!("bad x range [{}, {}]", x_range.0, x_range.1)));
        }
        Ok(TruncationPlan { n_terms, tail_estimate: self.tail_estimate(x_range.1, n_terms), x_range })
    }

    fn check_plan(plan: &TruncationPlan, x: f64) -> Result<()> {
        if !(x >= plan.x_range.0 && x <= plan.x_range.1) {
            return Err(Error::Domain(format!("x = {x} outside the plan range [{}, {}]", plan.x_range.0, plan.x_range.1)));
        }
        Ok(())
    }

    /// Terms `1..=n_terms` of the Bessel series at `x`, in order.
    pub fn bessel_terms(&self, x: f64, n_terms: usize) -> Result<Vec<Complex64>> {
        let a = self.spec.a;
        let nu = 1.0 + a;
        let k = self.spec.k_mod;
        let kf = k as f64;
        let own = self.sigma_for(n_terms);
        let table = own.as_ref().unwrap_or(&self.sigma);
        let (sn, cs) = (PI * a / 2.0).sin_cos();
        let yw = self.opts.y_weight.value();
        let cls = self.dual_class();
        let xp = x.powf(0.5 * (1.0 + a));
        let mut out = Vec::with_capacity(n_terms);
        for n in 1..=n_terms as u64 {
            let nf = n as f64;
            let z = 4.0 * PI * (nf * x).sqrt() / kf;
            let kk = bessel(BesselKind::K, nu, z)?;
            let yy = bessel(BesselKind::Y, nu, z)?;
            let jj = bessel(BesselKind::J, nu, z)?;
            let amp = xp * table.get(n) * nf.powf(-0.5 * (1.0 + a));
            let bracket = -2.0 / PI * cs * (kk + yw * yy) - sn * jj;
            out.push(e_neg_ratio(cls * n % k, k) * (amp * bracket));
        }
        Ok(out)
    }

    /// Truncated Bessel series for `Delta_a(x; h/k)`.
    pub fn delta_bessel(&self, x: f64, plan: &TruncationPlan) -> Result<SeriesValue> {
        Self::check_plan(plan, x)?;
        let mut acc = ComplexNeumaier::new();
        for t in self.bessel_terms(x, plan.n_terms)? {
            acc.add(t);
        }
        Ok(SeriesValue { value: acc.total(), terms: plan.n_terms, tail_estimate: self.tail_estimate(x, plan.n_terms) })
    }

    /// Two-term cosine form of the Bessel series, valid once `4 pi sqrt(x) / k >= 10`.
    pub fn delta_asymptotic(&self, x: f64, plan: &TruncationPlan) -> Result<SeriesValue> {
        Self::check_plan(plan, x)?;
        let kf = self.spec.k_mod as f64;
        if 4.0 * PI * x.sqrt() / kf < 10.0 {
            return Err(Error::Domain(format!(
                "cosine form needs 4 pi sqrt(x) / k >= 10, got {} at x = {x}",
                4.0 * PI * x.sqrt() / kf
            )));
        }
        let s = self.spec.sigma();
        let k = self.spec.k_mod;
        let own = self.sigma_for(plan.n_terms);
        let table = own.as_ref().unwrap_or(&self.sigma);
        let mu = match self.opts.sine_correction {
            SineCorrection::Hankel => 16.0 * s * s - 1.0,
            SineCorrection::ShiftedByOne => 16.0 * s * s - 2.0,
        };
        let cls = self.dual_class();
        let mut acc = ComplexNeumaier::new();
        for n in 1..=plan.n_terms as u64 {
            let nf = n as f64;
            let root = (nf * x).sqrt();
            let ph = asymptotic_phase(nf, x, kf);
            let (sp, cp) = ph.sin_cos();
            let w = table.get(n) * nf.powf(-0.25 - s) * (cp - mu * kf / (32.0 * PI * root) * sp);
            acc.add(e_neg_ratio(cls * n % k, k) * w);
        }
        let value = acc.total() * asymptotic_prefactor(kf, s, x);
        Ok(SeriesValue { value, terms: plan.n_terms, tail_estimate: self.tail_estimate(x, plan.n_terms) })
    }

    /// `int_{u/2}^{u} |Delta(x)|^2 dx`, integrated between consecutive integers.
    pub fn delta_mean_square(&self, u: f64) -> Result<QuadratureResult> {
        self.require_calibrated()?;
        if !(u >= 4.0 && u <= self.x_max) {
            return Err(Error::Domain(format!("mean square window needs 4 <= u <= {}, got {u}", self.x_max)));
        }
        let opts = QuadOptions { abs_tol: 1e-12, rel_tol: 1e-12, ..QuadOptions::default() };
        let mut edges = alloc::vec![u / 2.0];
        let mut m = (u / 2.0).floor() + 1.0;
        while m < u {
            edges.push(m);
            m += 1.0;
        }
        edges.push(u);
        let mut val = Neumaier::new();
        let mut err = Neumaier::new();
        let mut panels = 0;
        let mut evaluations = 0;
        for w in edges.windows(2) {
            let (p, q) = (w[0], w[1]);
            let width = q - p;
            let r = integrate(|x| Ok(self.delta_direct(x)?.norm_sqr()), p, q, &|_| width, &opts, &Serial)?;
            val.add(r.value);
            err.add(r.abs_error_estimate);
            panels += r.panels;
            evaluations += r.evaluations;
        }
        Ok(QuadratureResult { value: val.total(), abs_error_estimate: err.total(), panels, evaluations })
    }
}

/// `4 pi sqrt(n x) / k - pi/4`.
pub fn asymptotic_phase(n: f64, x: f64, k: f64) -> f64 {
    4.0 * PI * (n * x).sqrt() / k - PI / 4.0
}

/// `k^{1/2} / (sqrt 2 pi) x^{sigma - 1/4}`.
pub fn asymptotic_prefactor(k: f64, sigma: f64, x: f64) -> f64 {
    k.sqrt() / (SQRT_2 * PI) * x.powf(sigma - 0.25)
}

/// Pointwise envelope `k^{(2-2a)/(3-2a)} x^{1/(3-2a)}` for `Delta_a`.
pub fn pointwise_envelope(spec: &TwistedSumSpec, x: f64) -> f64 {
    let a = spec.a;
    (spec.k_mod as f64).powf((2.0 - 2.0 * a) / (3.0 - 2.0 * a)) * x.powf(1.0 / (3.0 - 2.0 * a))
}

/// `k (u^{1/2 + 2 sigma} - (u/2)^{1/2 + 2 sigma})`.
pub fn mean_square_envelope(spec: &TwistedSumSpec, u: f64) -> f64 {
    let p = 0.5 + 2.0 * spec.sigma();
    spec.k_mod as f64 * (u.powf(p) - (0.5 * u).powf(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halving_convention() {
        assert_eq!(divisor_sum(0.0, 0, 1, 3.0).unwrap(), Complex64::new(4.0, 0.0));
        assert_eq!(divisor_sum(0.0, 0, 1, 3.5).unwrap(), Complex64::new(5.0, 0.0));
    }

    #[test]
    fn spec_validation() {
        assert!(TwistedSumSpec::new(-0.2, 1, 3).is_ok());
        assert!(TwistedSumSpec::new(0.0, 1, 3).is_err());
        assert!(TwistedSumSpec::new(-0.2, 2, 4).is_err());
        assert!(TwistedSumSpec::new(-0.2, 3, 3).is_err());
        assert_eq!(TwistedSumSpec::from_sigma(0.4, 1, 3).unwrap().a, 2.0 * 0.4 - 1.0);
    }

    #[test]
    fn e_ratio_conjugates_exactly() {
        for k in 1..30u64 {
            for r in 0..k {
                assert_eq!(e_ratio(k - r, k), e_ratio(r, k).conj());
            }
        }
    }

    #[test]
    fn phase_and_prefactor() {
        assert_eq!(asymptotic_phase(1.0, 200.0, 3.0), 4.0 * PI * 200f64.sqrt() / 3.0 - PI / 4.0);
        let r = asymptotic_prefactor(3.0, 0.4, 400.0) / asymptotic_prefactor(3.0, 0.4, 200.0);
        assert!((r - 2f64.powf(0.4 - 0.25)).abs() < 1e-15);
    }
}
