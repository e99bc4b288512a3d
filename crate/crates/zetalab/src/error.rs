//! Error type shared by every evaluator.

use alloc::string::String;

/// Failure modes of the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Evaluation at a pole (zeta at 1, gamma at a non-positive integer).
    #[error("pole at {0}")]
    Pole(String),
    /// An argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A precondition on a configuration was violated; the message names it.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A truncation bound could not be met within the configured limits.
    #[error("precision failure: {0}")]
    Precision(String),
    /// Adaptive quadrature ran out of its panel budget.
    #[error("quadrature did not converge: {0}")]
    NonConvergence(String),
    /// The constant-term fit of a twisted divisor sum is too noisy.
    #[error("calibration failure: {0}")]
    Calibration(String),
}

/// Crate result alias.
pub type Result<T> = core::result::Result<T, Error>;
