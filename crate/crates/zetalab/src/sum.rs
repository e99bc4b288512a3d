//! Compensated (Neumaier) accumulation for real and complex values.
//!
//! Every reduction in the crate goes through these accumulators in a fixed
//! order, which keeps results bitwise reproducible across worker counts.

use num_complex::Complex64;

/// Neumaier's improved Kahan–Babuška summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    /// Empty accumulator.
    pub const fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    /// Add one term.
    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Current compensated total.
    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Component-wise Neumaier accumulator for complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexNeumaier {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexNeumaier {
    /// Empty accumulator.
    pub const fn new() -> Self {
        Self { re: Neumaier::new(), im: Neumaier::new() }
    }

    /// Add one term.
    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    /// Current compensated total.
    #[inline]
    pub fn total(&self) -> Complex64 {
        Complex64::new(self.re.total(), self.im.total())
    }
}

/// Compensated sum of a slice, in slice order.
pub fn sum(xs: &[f64]) -> f64 {
    let mut acc = Neumaier::new();
    for &x in xs {
        acc.add(x);
    }
    acc.total()
}

/// Compensated sum of complex values, in slice order.
pub fn sum_complex(zs: &[Complex64]) -> Complex64 {
    let mut acc = ComplexNeumaier::new();
    for &z in zs {
        acc.add(z);
    }
    acc.total()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_lost_by_naive_sum() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(sum(&xs), 2.0);
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 0.0);
    }

    #[test]
    fn complex_matches_componentwise() {
        let zs = [Complex64::new(1.0, 1e100), Complex64::new(1e100, 1.0), Complex64::new(-1e100, -1e100)];
        let t = sum_complex(&zs);
        assert_eq!(t, Complex64::new(1.0, 1.0));
    }
}
