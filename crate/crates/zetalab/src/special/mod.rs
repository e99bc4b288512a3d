//! Special-function kernel: `arcsinh`, complex `Gamma`, `zeta` by
//! Euler–Maclaurin, and Bessel `J`, `Y`, `K` of real order near `[1/2, 1)`.

mod bessel;
mod gamma;
mod zeta;

pub use bessel::{bessel, BesselKind, BESSEL_X_SWITCH, NU_MAX, NU_MIN};
pub use gamma::{gamma, gamma_real, ln_gamma};
pub use zeta::{zeta, zeta_with, ZetaEngine, ZetaPlan};

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Precision and tolerance policy shared by the evaluators.
///
/// Only binary64 arithmetic is implemented, so `working_precision` must be 53.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPolicy {
    /// Mantissa bits of the working float type.
    pub working_precision: u32,
    /// Absolute tolerance target.
    pub target_abs_tol: f64,
    /// Relative tolerance target.
    pub target_rel_tol: f64,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        Self { working_precision: 53, target_abs_tol: 1e-12, target_rel_tol: 1e-10 }
    }
}

impl PrecisionPolicy {
    /// Validated constructor.
    pub fn new(working_precision: u32, target_abs_tol: f64, target_rel_tol: f64) -> Result<Self> {
        let p = Self { working_precision, target_abs_tol, target_rel_tol };
        p.validate()?;
        Ok(p)
    }

    /// Check the invariants of the policy.
    pub fn validate(&self) -> Result<()> {
        if self.working_precision < 53 {
            return Err(Error::Config("working_precision must be >= 53 bits".into()));
        }
        if self.working_precision > 53 {
            return Err(Error::Precision(alloc::format!(
                "working_precision {} bits requested; only binary64 (53 bits) is implemented",
                self.working_precision
            )));
        }
        for (name, v) in [("target_abs_tol", self.target_abs_tol), ("target_rel_tol", self.target_rel_tol)] {
            if !(v > 0.0 && v <= 1e-6) {
                return Err(Error::Config(alloc::format!("{name} must lie in (0, 1e-6], got {v}")));
            }
        }
        Ok(())
    }
}

/// `arcsinh x = log(x + sqrt(x^2 + 1))`, odd and cancellation-free near zero.
pub fn arcsinh(x: f64) -> f64 {
    let ax = x.abs();
    let r = if ax < 9.5367431640625e-7 {
        // |x| < 2^-20
        ax * (1.0 - ax * ax / 6.0)
    } else if ax > 1e8 {
        (2.0 * ax).ln() + 1.0 / (4.0 * ax * ax)
    } else {
        (ax + ax * ax / (1.0 + (1.0 + ax * ax).sqrt())).ln_1p()
    };
    if x < 0.0 {
        -r
    } else {
        r
    }
}
