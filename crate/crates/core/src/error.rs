//! Error type shared by every module of the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, EvalError>;

/// Everything that can go wrong while evaluating or verifying.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum EvalError {
    /// Evaluation requested at (or on top of) a pole.
    #[error("pole at s = {0}")]
    Pole(Complex64),

    /// Point lies outside the certified accuracy window, or the requested
    /// accuracy is unreachable with the configured truncations.
    #[error("accuracy not certified: {0}")]
    Accuracy(String),

    /// Parameter violates the domain rules of the operation or handle.
    #[error("domain error: {0}")]
    Domain(String),

    /// Operation requires a primitive character.
    #[error("character mod {modulus} with label {label} is not primitive")]
    NonPrimitive { modulus: u32, label: u32 },

    /// Not a fundamental discriminant.
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    /// Modulus beyond the configured bound.
    #[error("modulus {0} exceeds the configured bound {1}")]
    Overflow(u64, u64),

    /// Handle has no cataloged functional equation / Selberg data.
    #[error("unsupported handle: {0}")]
    Unsupported(String),

    /// A zero sits on the integration contour and perturbation did not help.
    #[error("zero on rectangle boundary persists after {attempts} perturbations (min |F| = {min_abs:.3e})")]
    BoundaryZero { attempts: u32, min_abs: f64 },

    /// A pole of the integrand lies on the rectangle boundary.
    #[error("pole at s = {0} lies on the rectangle boundary")]
    PoleOnBoundary(Complex64),

    /// Newton refinement (or winding integrality) failed to converge.
    #[error("convergence failure: {0}")]
    Convergence(String),
}
