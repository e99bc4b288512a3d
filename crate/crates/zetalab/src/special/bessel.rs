//! Bessel functions `J_nu`, `Y_nu`, `K_nu` of real order `nu` in `[0.4, 1.1]`.
//!
//! Below [`BESSEL_X_SWITCH`]: `J` by its ascending series, `Y` by Temme's
//! series (`x < 2`) or the Steed continued fractions (`x >= 2`), and `K` by the
//! trapezoidal rule on `e^x K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt`.
//! Above it, all three use the large-argument Hankel expansions.

use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use super::gamma::gamma_real;
use crate::error::{Error, Result};
use crate::sum::Neumaier;

/// Smallest supported order.
pub const NU_MIN: f64 = 0.4;
/// Largest supported order.
pub const NU_MAX: f64 = 1.1;
/// Seam between the small-argument methods and the Hankel expansions.
pub const BESSEL_X_SWITCH: f64 = 17.0;

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 100_000;

/// Which Bessel function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    /// First kind.
    J,
    /// Second kind.
    Y,
    /// Modified, second kind.
    K,
}

/// `J_nu(x)`, `Y_nu(x)` or `K_nu(x)` for `x > 0`, `nu` in `[NU_MIN, NU_MAX]`.
pub fn bessel(kind: BesselKind, nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(alloc::format!("Bessel argument must be positive and finite, got {x}")));
    }
    if !(NU_MIN..=NU_MAX).contains(&nu) {
        return Err(Error::Domain(alloc::format!("Bessel order {nu} outside [{NU_MIN}, {NU_MAX}]")));
    }
    if x > BESSEL_X_SWITCH {
        return Ok(match kind {
            BesselKind::J => hankel_jy(nu, x).0,
            BesselKind::Y => hankel_jy(nu, x).1,
            BesselKind::K => hankel_k(nu, x),
        });
    }
    match kind {
        BesselKind::J => j_series(nu, x),
        BesselKind::Y => Ok(y_steed_temme(nu, x)),
        BesselKind::K => Ok(k_trapezoid(nu, x)),
    }
}

/// Ascending series `sum (-1)^m (x/2)^{2m+nu} / (m! Gamma(m+nu+1))`.
pub(crate) fn j_series(nu: f64, x: f64) -> Result<f64> {
    let h = 0.5 * x;
    let mut term = h.powf(nu) / gamma_real(nu + 1.0)?;
    let q = -h * h;
    let mut acc = Neumaier::new();
    acc.add(term);
    let mut m = 1.0;
    loop {
        term *= q / (m * (m + nu));
        acc.add(term);
        if term.abs() < EPS * 1e-2 * acc.total().abs() && m > h {
            break;
        }
        m += 1.0;
    }
    Ok(acc.total())
}

/// Hankel coefficients of `P`, `Q` summed to the smallest term. Returns `(J, Y)`.
pub(crate) fn hankel_jy(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = Neumaier::new();
    let mut q = Neumaier::new();
    p.add(1.0);
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    let mut k = 1usize;
    loop {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        let a = term.abs();
        if a >= prev || a < 1e-17 {
            break;
        }
        prev = a;
        // k odd -> Q with sign (-1)^((k-1)/2); k even -> P with sign (-1)^(k/2)
        let sign = if (k / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        if k % 2 == 1 {
            q.add(sign * term);
        } else {
            p.add(if (k / 2) % 2 == 1 { -term } else { term });
        }
        k += 1;
        if k > 200 {
            break;
        }
    }
    let (p, q) = (p.total(), q.total());
    let chi = reduce_phase(x, nu);
    let (s, c) = chi.sin_cos();
    let amp = (2.0 / (PI * x)).sqrt();
    (amp * (p * c - q * s), amp * (p * s + q * c))
}

/// `x - (nu/2 + 1/4) pi`, with `x` reduced mod `2 pi` first.
fn reduce_phase(x: f64, nu: f64) -> f64 {
    const TWO_PI: f64 = 2.0 * PI;
    let r = x - TWO_PI * (x / TWO_PI).floor();
    r - (0.5 * nu + 0.25) * PI
}

/// `K_nu(x) ~ sqrt(pi/(2x)) e^{-x} sum a_k(nu) / x^k`.
pub(crate) fn hankel_k(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut acc = Neumaier::new();
    acc.add(1.0);
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200usize {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        let a = term.abs();
        if a >= prev || a < 1e-17 {
            break;
        }
        prev = a;
        acc.add(term);
    }
    (PI / (2.0 * x)).sqrt() * (-x).exp() * acc.total()
}

/// Trapezoidal rule for `K_nu`, step 1/16, truncated where the integrand is negligible.
pub(crate) fn k_trapezoid(nu: f64, x: f64) -> f64 {
    let h = 1.0 / 16.0;
    let f = |t: f64| (-x * (t.cosh() - 1.0)).exp() * (nu * t).cosh();
    let mut acc = Neumaier::new();
    acc.add(0.5 * f(0.0));
    let mut i = 1usize;
    loop {
        let v = f(i as f64 * h);
        acc.add(v);
        if v < 1e-18 * acc.total() {
            break;
        }
        i += 1;
    }
    h * acc.total() * (-x).exp()
}

/// Series of `1/Gamma(1+z)` about `z = 0`.
const RGAMMA1P: [f64; 27] = [
    1.0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_9,
    -0.042_002_635_034_095_24,
    0.166_538_611_382_291_48,
    -0.042_197_734_555_544_33,
    -0.009_621_971_527_876_973,
    0.007_218_943_246_663_1,
    -0.001_165_167_591_859_065_2,
    -0.000_215_241_674_114_950_98,
    0.000_128_050_282_388_116_2,
    -0.000_020_134_854_780_788_24,
    -0.000_001_250_493_482_142_670_6,
    0.000_001_133_027_231_981_696,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_100_5e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_506_6e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_260_8e-15,
    -1.181_259_301_697_458_8e-16,
    1.186_692_254_751_600_4e-18,
];

/// Temme's `gamma_1`, `gamma_2`, `1/Gamma(1+mu)`, `1/Gamma(1-mu)` for `|mu| <= 1/2`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mut gpl = 0.0;
    let mut gmi = 0.0;
    let mut g1 = 0.0;
    let mut g2 = 0.0;
    for &c in RGAMMA1P.iter().rev() {
        gpl = gpl * mu + c;
        gmi = gmi * -mu + c;
    }
    // g1 = -sum_{k odd} c_k mu^{k-1}, g2 = sum_{k even} c_k mu^k
    let m2 = mu * mu;
    for k in (0..RGAMMA1P.len()).rev() {
        if k % 2 == 1 {
            g1 = g1 * m2 - RGAMMA1P[k];
        } else {
            g2 = g2 * m2 + RGAMMA1P[k];
        }
    }
    (g1, g2, gpl, gmi)
}

/// `Y_nu(x)` via the Temme series (`x < 2`) or Steed's CF1 + CF2 (`x >= 2`).
pub(crate) fn y_steed_temme(nu: f64, x: f64) -> f64 {
    let nl = if x < 2.0 { (nu + 0.5) as i64 } else { ((nu - x + 1.5) as i64).max(0) };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let (mut rymu, mut ry1);
    if x < 2.0 {
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let e = e.exp();
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut c = 1.0;
        let dd = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut i = 1.0;
        loop {
            ff = (i * ff + p + q) / (i * i - xmu2);
            c *= dd / i;
            p /= i - xmu;
            q /= i + xmu;
            let del = c * (ff + r * q);
            sum += del;
            let del1 = c * p - i * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                break;
            }
            i += 1.0;
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
    } else {
        // CF1: f = J'_nu / J_nu, then down-recurrence to mu.
        let mut h = (nu * xi).max(FPMIN);
        let mut b = xi2 * nu;
        let mut d = 0.0;
        let mut c = h;
        let mut isign = 1.0;
        for _ in 0..MAXIT {
            b += xi2;
            d = b - d;
            if d.abs() < FPMIN {
                d = FPMIN;
            }
            c = b - 1.0 / c;
            if c.abs() < FPMIN {
                c = FPMIN;
            }
            d = 1.0 / d;
            if d < 0.0 {
                isign = -isign;
            }
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < EPS {
                break;
            }
        }
        let mut rjl = isign * FPMIN;
        let mut rjpl = h * rjl;
        let mut fact = nu * xi;
        for _ in 0..nl {
            let t = fact * rjl + rjpl;
            fact -= xi;
            rjpl = fact * t - rjl;
            rjl = t;
        }
        if rjl == 0.0 {
            rjl = EPS;
        }
        let f = rjpl / rjl;
        // CF2: p + iq = (J' + iY') / (J + iY) at order mu.
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        for i in 2..MAXIT {
            a += 2.0 * (i - 1) as f64;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                break;
            }
        }
        let w = xi2 / PI;
        let gam = (p - f) / q;
        let mut rjmu = (w / ((p - f) * gam + q)).sqrt();
        if rjl < 0.0 {
            rjmu = -rjmu;
        }
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    for i in 1..=nl {
        let t = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = t;
    }
    rymu
}
