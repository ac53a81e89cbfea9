//! Functional-equation descriptors and normalized residual checks.
//!
//! Every cataloged handle F has a partner G and a factor
//!
//!   Φ(s) = sign · coeff · base^{s+shift} · [2Γπ(s)cos(π(s−κ)/2)]^{c}
//!                                        · [2Γπ(s)sin(π(s−κ)/2)]^{d}
//!
//! such that F(1−s) = Φ(s)·G(s). The residual reported for a point is
//!
//!   |F(1−s) − Φ(s)G(s)| / (|F(1−s)| + |Φ(s)G(s)| + 1),
//!
//! so it is meaningful both at large values and near zeros. The factor is
//! assembled in log space and exponentiated once.

use num_complex::Complex64;

use crate::error::{EvalError, Result};
use crate::gamma::{log_gamma_pi, log_two_cos_half, log_two_sin_half, LogComplex};

use super::{FunctionHandle, Rational};

/// The verified shape F(1−s) = sign·scale(s)·Γ-product(s)·partner(s).
#[derive(Debug, Clone)]
pub struct FunctionalEquationSpec {
    /// Constant multiplier (e.g. (−i)^κ G(χ) for the L-function pair).
    pub scale_coeff: Complex64,
    /// scale = base^{s + shift}; base = 1 encodes a scale-free equation.
    pub scale_base: f64,
    pub scale_shift: f64,
    /// Exponent of the cos-type factor 2Γπ(s)cos(π(s−κ)/2).
    pub cos_power: u32,
    /// Exponent of the sin-type factor 2Γπ(s)sin(π(s−κ)/2).
    pub sin_power: u32,
    /// κ-offset in the trig argument; 0 everywhere except the Vaughan pair,
    /// where cos(π(s−κ)/2) with κ = κ(χ) turns Γcos into Γsin for odd χ.
    pub kappa_shift: u8,
    pub sign: f64,
    /// Right-hand side function; differs from the handle for the swapped
    /// pairs (Z ↔ P, Y ↔ O) and for L(s,χ) ↔ L(s,χ̄).
    pub partner: FunctionHandle,
}

impl FunctionalEquationSpec {
    fn plain(gamma_cos: u32, gamma_sin: u32, partner: FunctionHandle) -> Self {
        FunctionalEquationSpec {
            scale_coeff: Complex64::new(1.0, 0.0),
            scale_base: 1.0,
            scale_shift: 0.0,
            cos_power: gamma_cos,
            sin_power: gamma_sin,
            kappa_shift: 0,
            sign: 1.0,
            partner,
        }
    }

    /// The full factor Φ(s), log-space assembled.
    pub fn factor(&self, s: Complex64) -> Result<Complex64> {
        let kappa = self.kappa_shift as f64;
        let shifted = s - kappa;
        let mut log = LogComplex::ZERO;
        let total_gamma = self.cos_power + self.sin_power;
        if total_gamma > 0 {
            log = log.mul(log_gamma_pi(s)?.powi(total_gamma as i32));
        }
        if self.cos_power > 0 {
            log = log.mul(log_two_cos_half(shifted).powi(self.cos_power as i32));
        }
        if self.sin_power > 0 {
            log = log.mul(log_two_sin_half(shifted).powi(self.sin_power as i32));
        }
        if self.scale_base != 1.0 {
            let ln_b = self.scale_base.ln();
            log = log.mul(LogComplex::new(
                (s.re + self.scale_shift) * ln_b,
                s.im * ln_b,
            ));
        }
        Ok(self.sign * self.scale_coeff * log.exp())
    }
}

/// Functional-equation descriptor of a handle.
///
/// Unsupported: the identically-zero degenerate handles (their equation is
/// vacuous) and imprimitive L.
pub fn fe_spec(handle: &FunctionHandle) -> Result<FunctionalEquationSpec> {
    if handle.is_identically_zero() {
        return Err(EvalError::Unsupported(format!(
            "{handle} is identically zero; its functional equation is vacuous"
        )));
    }
    Ok(match handle {
        FunctionHandle::RawZeta => {
            // ζ(1−s) = Γcos(s) ζ(s)
            FunctionalEquationSpec::plain(1, 0, FunctionHandle::RawZeta)
        }
        FunctionHandle::RawL(c) => {
            if !c.chi.is_primitive() {
                return Err(EvalError::Unsupported(
                    "the L-function pair equation needs a primitive character".into(),
                ));
            }
            // L(1−s,χ) = (−i)^κ q^{s−1} G(χ) Γ_{cos/sin}(s) L(s,χ̄)
            let minus_i_kappa = if c.kappa() == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, -1.0)
            };
            FunctionalEquationSpec {
                scale_coeff: minus_i_kappa * c.gauss,
                scale_base: c.q() as f64,
                scale_shift: -1.0,
                cos_power: u32::from(c.kappa() == 0),
                sin_power: u32::from(c.kappa() == 1),
                kappa_shift: 0,
                sign: 1.0,
                partner: FunctionHandle::RawL(super::CharBundle::new(c.chi_bar.clone())),
            }
        }
        FunctionHandle::Z(a) => {
            FunctionalEquationSpec::plain(1, 0, FunctionHandle::P(*a))
        }
        FunctionHandle::P(a) => {
            FunctionalEquationSpec::plain(1, 0, FunctionHandle::Z(*a))
        }
        FunctionHandle::Y(a) => {
            FunctionalEquationSpec::plain(0, 1, FunctionHandle::O(*a))
        }
        FunctionHandle::O(a) => {
            FunctionalEquationSpec::plain(0, 1, FunctionHandle::Y(*a))
        }
        FunctionHandle::QFun(a) => FunctionalEquationSpec::plain(1, 0, FunctionHandle::QFun(*a)),
        FunctionHandle::X(a) => FunctionalEquationSpec::plain(0, 1, FunctionHandle::X(*a)),
        FunctionHandle::Dh => {
            // f(1−s) = 5^{s−1/2} Γsin(s) f(s)
            FunctionalEquationSpec {
                scale_base: 5.0,
                scale_shift: -0.5,
                ..FunctionalEquationSpec::plain(0, 1, FunctionHandle::Dh)
            }
        }
        FunctionHandle::FChi(c) | FunctionHandle::GChi(c) => {
            // f(1−s,χ) = Γcos(s) f(s,χ) for even χ, Γsin(s) for odd; g alike.
            let even = c.kappa() == 0;
            FunctionalEquationSpec::plain(
                u32::from(even),
                u32::from(!even),
                handle.clone(),
            )
        }
        FunctionHandle::VPlus(c) | FunctionHandle::VMinus(c) => {
            let plus = matches!(handle, FunctionHandle::VPlus(_));
            FunctionalEquationSpec {
                scale_coeff: Complex64::new(1.0, 0.0),
                scale_base: c.q() as f64,
                scale_shift: -0.5,
                cos_power: 1,
                sin_power: 0,
                kappa_shift: c.kappa(),
                sign: if plus { 1.0 } else { -1.0 },
                partner: handle.clone(),
            }
        }
        FunctionHandle::SelbergEven(a) => FunctionalEquationSpec {
            scale_base: (a.den() * a.den()) as f64,
            scale_shift: -0.5,
            ..FunctionalEquationSpec::plain(2, 0, handle.clone())
        },
        FunctionHandle::SelbergOdd(a) => FunctionalEquationSpec {
            scale_base: (a.den() * a.den()) as f64,
            scale_shift: -0.5,
            ..FunctionalEquationSpec::plain(0, 2, handle.clone())
        },
        FunctionHandle::QuadDedekind { d, .. } => {
            // ζ_K(1−s) = |D|^{s−1/2} A(r₁,r₂;s) ζ_K(s), (r₁,r₂) = (2,0) for
            // real fields and (0,1) for imaginary ones.
            let (r1, r2) = if *d > 0 { (2u32, 0u32) } else { (0, 1) };
            FunctionalEquationSpec {
                scale_base: d.unsigned_abs() as f64,
                scale_shift: -0.5,
                ..FunctionalEquationSpec::plain(r1 + r2, r2, handle.clone())
            }
        }
        FunctionHandle::DedekindComposite(p) => {
            // Each constituent pair swaps under s ↔ 1−s (Z ↔ P, Y ↔ O), so
            // the equation closes onto the member with the a₁/a₂ and a₄/a₅
            // slots exchanged; it is self-paired exactly when those shifts
            // coincide.
            let (r1, r2) = p.gamma_exponents();
            let mut a = p.a;
            a.swap(0, 1);
            a.swap(3, 4);
            let partner = FunctionHandle::DedekindComposite(std::sync::Arc::new(
                super::DedekindParams {
                    l: p.l,
                    a,
                    chi_even: p.chi_even.clone(),
                    chi_odd: p.chi_odd.clone(),
                    n_scale: p.n_scale,
                },
            ));
            FunctionalEquationSpec {
                scale_base: p.n_scale as f64,
                scale_shift: -0.5,
                ..FunctionalEquationSpec::plain(r1 + r2, r2, partner)
            }
        }
    })
}

/// Normalized functional-equation residual at s:
/// |F(1−s) − Φ(s)G(s)| / (|F(1−s)| + |Φ(s)G(s)| + 1).
pub fn fe_residual(handle: &FunctionHandle, s: Complex64) -> Result<f64> {
    let spec = fe_spec(handle)?;
    let lhs = handle.eval(Complex64::new(1.0, 0.0) - s)?;
    let rhs = spec.factor(s)? * spec.partner.eval(s)?;
    Ok((lhs - rhs).norm() / (lhs.norm() + rhs.norm() + 1.0))
}

/// Convenience: the a-parameter of a handle, when it has one.
pub fn handle_shift(handle: &FunctionHandle) -> Option<Rational> {
    match handle {
        FunctionHandle::Z(a)
        | FunctionHandle::P(a)
        | FunctionHandle::Y(a)
        | FunctionHandle::O(a)
        | FunctionHandle::QFun(a)
        | FunctionHandle::X(a)
        | FunctionHandle::SelbergEven(a)
        | FunctionHandle::SelbergOdd(a) => Some(*a),
        _ => None,
    }
}
