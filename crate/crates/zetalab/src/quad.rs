//! Deterministic adaptive Gauss–Kronrod (10/21) quadrature.
//!
//! The interval is first cut into initial panels whose widths are capped by a
//! caller-supplied scale function (the local oscillation length of the
//! integrand). Each initial panel is refined independently by depth-first
//! bisection, and the panel totals are reduced in panel order with compensated
//! summation. The result therefore does not depend on how an [`Executor`]
//! schedules the panels.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::sum::ComplexNeumaier;
use crate::Complex64;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_1,
    0.973_906_528_517_171_7,
    0.930_157_491_355_708_2,
    0.865_063_366_688_984_5,
    0.780_817_726_586_416_9,
    0.679_409_568_299_024_4,
    0.562_757_134_668_604_7,
    0.433_395_394_129_247_2,
    0.294_392_862_701_460_2,
    0.148_874_338_981_631_22,
    0.0,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982_04,
    0.269_266_719_309_996_35,
    0.295_524_224_714_752_87,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874,
    0.032_558_162_307_964_725,
    0.054_755_896_574_351_995,
    0.075_039_674_810_919_96,
    0.093_125_454_583_697_6,
    0.109_387_158_802_297_64,
    0.123_491_976_262_065_84,
    0.134_709_217_311_473_34,
    0.142_775_938_577_060_09,
    0.147_739_104_901_338_49,
    0.149_445_554_002_916_9,
];

/// Kronrod and Gauss weight sums as accumulated in `gk21`; dividing by them
/// makes constants integrate exactly.
const KRONROD_SUM: f64 = {
    let mut s = WGK[10];
    let mut j = 0;
    while j < 10 {
        s += 2.0 * WGK[j];
        j += 1;
    }
    s
};
const GAUSS_SUM: f64 = {
    let mut s = 0.0;
    let mut j = 0;
    while j < 5 {
        s += 2.0 * WG[j];
        j += 1;
    }
    s
};

/// Points per Gauss–Kronrod application.
pub const GK_POINTS: usize = 21;

/// Values the engine can integrate.
pub trait QuadValue: Copy + Send + Sync {
    /// Embed into the complex accumulator.
    fn to_complex(self) -> Complex64;
    /// Project back from the accumulator.
    fn from_complex(z: Complex64) -> Self;
}

impl QuadValue for f64 {
    #[inline]
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    #[inline]
    fn from_complex(z: Complex64) -> Self {
        z.re
    }
}

impl QuadValue for Complex64 {
    #[inline]
    fn to_complex(self) -> Complex64 {
        self
    }
    #[inline]
    fn from_complex(z: Complex64) -> Self {
        z
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<V = f64> {
    /// Integral estimate.
    pub value: V,
    /// Sum of the per-panel error estimates.
    pub abs_error_estimate: f64,
    /// Accepted (leaf) panels.
    pub panels: usize,
    /// Integrand evaluations.
    pub evaluations: usize,
}

/// Tolerances and budgets for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    /// Absolute tolerance over the whole interval, shared in proportion to width.
    pub abs_tol: f64,
    /// Relative tolerance against the integral of `|f|` on each panel.
    pub rel_tol: f64,
    /// Maximum bisection depth below an initial panel.
    pub max_depth: u32,
    /// Maximum number of accepted panels across the interval.
    pub max_panels: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-12, max_depth: 30, max_panels: 2_000_000 }
    }
}

/// Result of refining one initial panel.
#[derive(Debug, Clone)]
pub struct PanelOutcome {
    /// Integral over the panel.
    pub value: Complex64,
    /// Error estimate over the panel.
    pub error: f64,
    /// Leaf count.
    pub leaves: usize,
    /// Integrand evaluations.
    pub evaluations: usize,
    /// First failure raised inside the panel, if any.
    pub failure: Option<Error>,
}

/// Schedules independent panel jobs. Implementations must return the outcomes
/// in index order.
pub trait Executor: Sync {
    /// Run `job(i)` for `i in 0..n` and collect the outcomes in index order.
    fn map(&self, n: usize, job: &(dyn Fn(usize) -> PanelOutcome + Sync)) -> Vec<PanelOutcome>;
}

/// Runs panels one after another on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Serial;

impl Executor for Serial {
    fn map(&self, n: usize, job: &(dyn Fn(usize) -> PanelOutcome + Sync)) -> Vec<PanelOutcome> {
        (0..n).map(job).collect()
    }
}

/// Edges `a = x_0 < x_1 < ... < x_m = b` with `x_{i+1} - x_i <= width(x_i)`.
pub fn partition(a: f64, b: f64, width: &dyn Fn(f64) -> f64) -> Result<Vec<f64>> {
    if !(a.is_finite() && b.is_finite()) || b < a {
        return Err(Error::Domain(format!("bad integration interval [{a}, {b}]")));
    }
    let mut edges = Vec::new();
    edges.push(a);
    if b == a {
        return Ok(edges);
    }
    let mut x = a;
    loop {
        let w = width(x);
        if !(w > 0.0) {
            return Err(Error::Domain(format!("non-positive panel width {w} at {x}")));
        }
        let next = x + w;
        if next >= b || (b - next) < 1e-9 * w {
            edges.push(b);
            return Ok(edges);
        }
        edges.push(next);
        x = next;
    }
}

/// Fixed 10-point Gauss–Legendre rule on `[a, b]`, for integrands known to be
/// smooth on the interval.
pub fn gauss10<F>(f: F, a: f64, b: f64) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..5 {
        let dx = h * XGK[2 * j + 1];
        acc += (f(c - dx) + f(c + dx)) * WG[j];
    }
    acc * (2.0 * h / GAUSS_SUM)
}

struct Gk {
    value: Complex64,
    error: f64,
    resabs: f64,
}

fn gk21<F>(f: &F, a: f64, b: f64) -> Result<Gk>
where
    F: Fn(f64) -> Result<Complex64> + ?Sized,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut rk = fc * WGK[10];
    let mut rg = Complex64::new(0.0, 0.0);
    let mut rabs = fc.norm() * WGK[10];
    let mut fv1 = [Complex64::new(0.0, 0.0); 10];
    let mut fv2 = [Complex64::new(0.0, 0.0); 10];
    for j in 0..10 {
        let dx = h * XGK[j];
        let f1 = f(c - dx)?;
        let f2 = f(c + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        rk += (f1 + f2) * WGK[j];
        rabs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            rg += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = rk / KRONROD_SUM;
    let mut rasc = WGK[10] * (fc - mean).norm();
    for j in 0..10 {
        rasc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let ah = h.abs();
    let rk = rk / KRONROD_SUM;
    let rg = rg / GAUSS_SUM;
    let value = rk * (2.0 * h);
    let resabs = rabs * ah;
    let resasc = rasc * ah;
    let mut error = ((rk - rg) * (2.0 * h)).norm();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    if floor > error {
        error = floor;
    }
    Ok(Gk { value, error, resabs })
}

fn refine<F>(f: &F, a: f64, b: f64, total_width: f64, opts: &QuadOptions) -> PanelOutcome
where
    F: Fn(f64) -> Result<Complex64> + ?Sized,
{
    let mut acc = ComplexNeumaier::new();
    let mut err = crate::sum::Neumaier::new();
    let mut leaves = 0usize;
    let mut evaluations = 0usize;
    let mut failure = None;
    // depth-first, left before right
    let mut stack: Vec<(f64, f64, u32)> = Vec::new();
    stack.push((a, b, 0));
    while let Some((lo, hi, depth)) = stack.pop() {
        evaluations += GK_POINTS;
        let gk = match gk21(f, lo, hi) {
            Ok(g) => g,
            Err(e) => {
                failure.get_or_insert(e);
                break;
            }
        };
        let budget = (opts.abs_tol * (hi - lo) / total_width).max(opts.rel_tol * gk.resabs);
        if gk.error <= budget || depth >= opts.max_depth || leaves >= opts.max_panels {
            if gk.error > budget && failure.is_none() {
                failure = Some(Error::NonConvergence(format!(
                    "panel [{lo}, {hi}] error {:e} above budget {budget:e} at depth {depth}",
                    gk.error
                )));
            }
            acc.add(gk.value);
            err.add(gk.error);
            leaves += 1;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi, depth + 1));
            stack.push((lo, mid, depth + 1));
        }
    }
    PanelOutcome { value: acc.total(), error: err.total(), leaves, evaluations, failure }
}

/// Integrate `f` over `[a, b]` with initial panel widths capped by `width`.
///
/// Non-convergence anywhere is reported as [`Error::NonConvergence`]; integrand
/// failures are propagated.
pub fn integrate<V, F>(
    f: F,
    a: f64,
    b: f64,
    width: &dyn Fn(f64) -> f64,
    opts: &QuadOptions,
    exec: &dyn Executor,
) -> Result<QuadratureResult<V>>
where
    V: QuadValue,
    F: Fn(f64) -> Result<V> + Sync,
{
    let edges = partition(a, b, width)?;
    let n = edges.len() - 1;
    if n == 0 {
        return Ok(QuadratureResult {
            value: V::from_complex(Complex64::new(0.0, 0.0)),
            abs_error_estimate: 0.0,
            panels: 0,
            evaluations: 0,
        });
    }
    let total = b - a;
    let g = move |x: f64| f(x).map(V::to_complex);
    let g: Box<dyn Fn(f64) -> Result<Complex64> + Sync> = Box::new(g);
    let job = |i: usize| refine(&*g, edges[i], edges[i + 1], total, opts);
    let outcomes = exec.map(n, &job);
    let mut acc = ComplexNeumaier::new();
    let mut err = crate::sum::Neumaier::new();
    let mut panels = 0usize;
    let mut evaluations = 0usize;
    for o in outcomes {
        if let Some(e) = o.failure {
            return Err(e);
        }
        acc.add(o.value);
        err.add(o.error);
        panels += o.leaves;
        evaluations += o.evaluations;
    }
    if panels > opts.max_panels {
        return Err(Error::NonConvergence(format!("{panels} panels exceed the budget {}", opts.max_panels)));
    }
    Ok(QuadratureResult { value: V::from_complex(acc.total()), abs_error_estimate: err.total(), panels, evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_interval_is_zero() {
        let r: QuadratureResult = integrate(|_| Ok(1.0), 3.0, 3.0, &|_| 1.0, &QuadOptions::default(), &Serial).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.panels, 0);
    }

    #[test]
    fn constant_integrand_is_exact() {
        let r: QuadratureResult = integrate(|_| Ok(1.0), 0.0, 10.0, &|_| 0.5, &QuadOptions::default(), &Serial).unwrap();
        assert_eq!(r.value, 10.0);
        assert!(r.evaluations >= r.panels);
    }

    #[test]
    fn oscillatory_complex() {
        // int_0^50 e^{i t^2/10} dt against erf-free quadrature at a much finer cap
        let f = |t: f64| Ok(Complex64::new(0.0, t * t / 10.0).exp());
        let opts = QuadOptions { abs_tol: 1e-12, rel_tol: 1e-14, ..QuadOptions::default() };
        let coarse: QuadratureResult<Complex64> = integrate(f, 0.0, 50.0, &|_| 2.0, &opts, &Serial).unwrap();
        let fine: QuadratureResult<Complex64> = integrate(f, 0.0, 50.0, &|_| 0.05, &opts, &Serial).unwrap();
        assert!((coarse.value - fine.value).norm() < 1e-10);
    }

    #[test]
    fn non_convergence_is_reported() {
        let opts = QuadOptions { abs_tol: 1e-14, rel_tol: 1e-15, max_depth: 2, max_panels: 100 };
        let r: Result<QuadratureResult> = integrate(|x: f64| Ok(x.abs().sqrt()), -1.0, 1.0, &|_| 2.0, &opts, &Serial);
        assert!(matches!(r, Err(Error::NonConvergence(_))));
    }

    #[test]
    fn integrand_errors_propagate() {
        let r: Result<QuadratureResult> =
            integrate(|_| Err(Error::Domain("x".into())), 0.0, 1.0, &|_| 1.0, &QuadOptions::default(), &Serial);
        assert!(matches!(r, Err(Error::Domain(_))));
    }
}
