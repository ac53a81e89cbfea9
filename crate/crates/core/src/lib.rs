//! Numerics for zeta and L-functions built from the Hurwitz and periodic
//! zeta functions.
//!
//! The crate provides four layers:
//!
//! * [`gamma`] — complex log-gamma and the normalized gamma factors
//!   Γπ(s) = Γ(s)/(2π)^s, Γcos(s) = 2Γπ(s)cos(πs/2), Γsin(s) = 2Γπ(s)sin(πs/2)
//!   that appear in every functional equation here, plus the product factor
//!   A(r₁,r₂;s) = Γcos^{r₁+r₂}(s)·Γsin^{r₂}(s).
//! * [`characters`] — Dirichlet characters mod q, Gauss sums, conductors,
//!   and the Kronecker character of a fundamental discriminant.
//! * [`zeta`] — analytic continuations of ζ(s,a), Li_s(e^{2πia}), ζ(s) and
//!   L(s,χ), accurate on σ ∈ [−10, 12], |t| ≤ 400.
//! * [`composed`] / [`zeros`] — every composite function assembled from the
//!   kernels (symmetric/antisymmetric Hurwitz combinations, the
//!   Davenport–Heilbronn function, q^s L(s,χ) + i^{−κ}G(χ)L(s,χ̄) and its
//!   variants, Dedekind-style products), their functional-equation
//!   descriptors and residual checks, linear-relation verification, and
//!   argument-principle zero counting/location in rectangles.
//!
//! All scalar arithmetic is `f64`; values are `num_complex::Complex64`.
//! Every public evaluator is a pure function: no global mutable state, safe
//! to call from any thread.

pub mod characters;
pub mod composed;
pub mod error;
pub mod gamma;
pub mod zeros;
pub mod zeta;

pub use error::{EvalError, Result};
pub use num_complex::Complex64;

/// A point s = σ + it of the complex plane. Alias for the crate-wide scalar.
pub type ComplexPoint = Complex64;

/// Rejects non-finite input at the public API boundary.
pub(crate) fn check_finite(s: Complex64) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(EvalError::Domain(format!(
            "non-finite complex argument ({}, {})",
            s.re, s.im
        )))
    }
}
