//! Numerical laboratory for the mean square of `zeta(s) A(s)` on the strip
//! `1/4 < sigma < 1/2`.
//!
//! The crate computes the explicit Atkinson-type decomposition
//! `I(T) = M(T) + S1(T, Y) + S2(T, xi(T, Y)) + R` from both sides: the
//! integral of `|zeta A|^2` by adaptive quadrature and the main term and
//! exponential sums in closed form. Supporting pieces are the twisted divisor
//! Voronoi machinery and a bench for the stationary-phase lemmas.
//!
//! The crate is `no_std` (with `alloc`) when built without the `std` feature;
//! enable `libm` in that case for the float intrinsics.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_docs)]
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

extern crate alloc;

#[cfg(not(any(feature = "std", feature = "libm")))]
compile_error!("zetalab needs either the `std` or the `libm` feature for float math");

pub mod arithmetic;
pub mod error;
pub mod explicit;
pub mod meansquare;
pub mod quad;
pub mod saddle;
pub mod special;
pub mod sum;
pub mod voronoi;

pub use error::{Error, Result};
pub use num_complex::Complex64;
