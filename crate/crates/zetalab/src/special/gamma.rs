//! Complex Gamma by the Lanczos approximation (g = 7, nine terms) with the
//! reflection formula on the left half-plane.

use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::Complex64;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn check_pole(s: Complex64) -> Result<()> {
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        return Err(Error::Pole(alloc::format!("Gamma at non-positive integer {}", s.re)));
    }
    Ok(())
}

/// `log Gamma(s)` for `Re s >= 1/2` (principal branch of the Lanczos form).
fn ln_gamma_right(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + HALF_LN_2PI + x.ln()
}

/// `log Gamma(s)`; on the left half-plane via reflection, so the imaginary part
/// is a continuous-in-s logarithm only up to multiples of `2 pi`.
pub fn ln_gamma(s: Complex64) -> Result<Complex64> {
    check_pole(s)?;
    if s.re >= 0.5 {
        Ok(ln_gamma_right(s))
    } else {
        let sinpi = (s * PI).sin();
        Ok(Complex64::new(PI.ln(), 0.0) - sinpi.ln() - ln_gamma_right(1.0 - s))
    }
}

/// Complex `Gamma(s)`; pole error at non-positive integers.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    check_pole(s)?;
    if s.re >= 0.5 {
        Ok(ln_gamma_right(s).exp())
    } else {
        let sinpi = (s * PI).sin();
        Ok(PI / (sinpi * ln_gamma_right(1.0 - s).exp()))
    }
}

/// Real `Gamma(x)`.
pub fn gamma_real(x: f64) -> Result<f64> {
    Ok(gamma(Complex64::new(x, 0.0))?.re)
}
