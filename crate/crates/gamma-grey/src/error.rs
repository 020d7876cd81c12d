//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method (quadrature, series) failed to reach its tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Two grid functions with incompatible grids were combined.
    #[error("grid mismatch: operands live on different grids")]
    GridMismatch,

    /// The mixing density degenerates to a point mass at rho = 1; the caller
    /// must use the point-mass convention instead of the density formula.
    #[error("rho = 1 is degenerate: {0}")]
    RhoOneDegenerate(String),

    /// A gamma-function pole was hit (non-positive integer argument).
    #[error("pole: {0}")]
    Pole(String),

    /// Series truncation cap was exceeded; carries the partial sum and a
    /// bound on the discarded tail.
    #[error("series cap exceeded (partial = {partial}, tail bound = {tail_bound:.3e})")]
    SeriesCapExceeded {
        partial: Complex64,
        tail_bound: f64,
    },

    /// A Gram matrix failed its positive-semidefiniteness tolerance.
    #[error("matrix not positive definite: {0}")]
    Indefinite(String),

    /// Malformed argument (counts, ranges, parameter constraints).
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
