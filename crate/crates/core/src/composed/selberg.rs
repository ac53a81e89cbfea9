//! Degree/conductor calculus for the handles that sit in the extended
//! Selberg class (after q^{−s} normalization where applicable).
//!
//! A gamma factor γ(s) = Q^s Π_j Γ(λ_j s + μ_j) carries
//!
//!   degree    d = 2 Σ_j λ_j
//!   conductor q = (2π)^d · Q² · Π_j λ_j^{2λ_j}
//!
//! (product form; the catalog values below are q = 1 for ζ, q for the
//! degree-one members L(s,χ), q^{−s}f(s,χ), q^{−s}Q(s,r/q), q^{−s}X(s,r/q),
//! and q² for the degree-two products q^{−s}ZP and q^{−s}YO).

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{EvalError, Result};

use super::FunctionHandle;

/// (Q, [(λ_j, μ_j)]) of a Selberg-class gamma factor.
#[derive(Debug, Clone, Serialize)]
pub struct GammaFactorSpec {
    pub q_scale: f64,
    pub factors: Vec<(f64, Complex64)>,
}

impl GammaFactorSpec {
    pub fn new(q_scale: f64, factors: Vec<(f64, Complex64)>) -> Result<Self> {
        if q_scale <= 0.0 {
            return Err(EvalError::Domain("gamma factor needs Q > 0".into()));
        }
        if factors.iter().any(|(_, mu)| mu.re < 0.0) {
            return Err(EvalError::Domain("gamma factor needs ℜ(μ_j) ≥ 0".into()));
        }
        Ok(GammaFactorSpec { q_scale, factors })
    }
}

/// Degree and conductor of a gamma factor, product form.
pub fn degree_conductor(spec: &GammaFactorSpec) -> (f64, f64) {
    let degree: f64 = 2.0 * spec.factors.iter().map(|(l, _)| l).sum::<f64>();
    let lambda_product: f64 = spec
        .factors
        .iter()
        .map(|(l, _)| l.powf(2.0 * l))
        .product();
    let conductor = (2.0 * std::f64::consts::PI).powf(degree)
        * spec.q_scale
        * spec.q_scale
        * lambda_product;
    (degree, conductor)
}

/// Full descriptor: gamma data plus the derived invariants and root number.
#[derive(Debug, Clone, Serialize)]
pub struct SelbergDescriptor {
    pub gamma: GammaFactorSpec,
    pub degree: f64,
    pub conductor: f64,
    pub root_number: Complex64,
}

impl SelbergDescriptor {
    fn from_gamma(gamma: GammaFactorSpec, root_number: Complex64) -> Self {
        let (degree, conductor) = degree_conductor(&gamma);
        SelbergDescriptor {
            gamma,
            degree,
            conductor,
            root_number,
        }
    }
}

const PI: f64 = std::f64::consts::PI;

/// Selberg-class data of a handle. The q^{−s} normalization of f(s,χ),
/// Q(s,r/q) and X(s,r/q) is implied. Handles outside the catalog (including
/// q^{−s}Z, P, q^{−s}Y, O, which fail the functional-equation axiom)
/// report `Unsupported`.
pub fn selberg_descriptor(handle: &FunctionHandle) -> Result<SelbergDescriptor> {
    let half = 0.5f64;
    let mu_even = Complex64::new(0.0, 0.0);
    let mu_odd = Complex64::new(0.5, 0.0);
    match handle {
        FunctionHandle::RawZeta => {
            let gamma = GammaFactorSpec::new(1.0 / PI.sqrt(), vec![(half, mu_even)])?;
            Ok(SelbergDescriptor::from_gamma(gamma, Complex64::new(1.0, 0.0)))
        }
        FunctionHandle::RawL(c) => {
            if !c.chi.is_primitive() {
                return Err(EvalError::Unsupported(
                    "Selberg data exists for primitive characters only".into(),
                ));
            }
            let q = c.q() as f64;
            let mu = if c.kappa() == 0 { mu_even } else { mu_odd };
            let gamma = GammaFactorSpec::new((q / PI).sqrt(), vec![(half, mu)])?;
            // root number ε(χ) = G(χ)/(i^κ √q) = λ(χ)
            Ok(SelbergDescriptor::from_gamma(gamma, c.lambda))
        }
        FunctionHandle::FChi(c) => {
            let q = c.q() as f64;
            let mu = if c.kappa() == 0 { mu_even } else { mu_odd };
            let gamma = GammaFactorSpec::new((q / PI).sqrt(), vec![(half, mu)])?;
            Ok(SelbergDescriptor::from_gamma(gamma, Complex64::new(1.0, 0.0)))
        }
        FunctionHandle::QFun(a) => {
            let q = a.den() as f64;
            let gamma = GammaFactorSpec::new((q / PI).sqrt(), vec![(half, mu_even)])?;
            Ok(SelbergDescriptor::from_gamma(gamma, Complex64::new(1.0, 0.0)))
        }
        FunctionHandle::X(a) => {
            if handle.is_identically_zero() {
                return Err(EvalError::Unsupported(
                    "identically-zero function has no Selberg data".into(),
                ));
            }
            let q = a.den() as f64;
            let gamma = GammaFactorSpec::new((q / PI).sqrt(), vec![(half, mu_odd)])?;
            Ok(SelbergDescriptor::from_gamma(gamma, Complex64::new(1.0, 0.0)))
        }
        FunctionHandle::SelbergEven(a) => {
            let q = a.den() as f64;
            let gamma =
                GammaFactorSpec::new(q / PI, vec![(half, mu_even), (half, mu_even)])?;
            Ok(SelbergDescriptor::from_gamma(gamma, Complex64::new(1.0, 0.0)))
        }
        FunctionHandle::SelbergOdd(a) => {
            if handle.is_identically_zero() {
                return Err(EvalError::Unsupported(
                    "identically-zero function has no Selberg data".into(),
                ));
            }
            let q = a.den() as f64;
            let gamma = GammaFactorSpec::new(q / PI, vec![(half, mu_odd), (half, mu_odd)])?;
            Ok(SelbergDescriptor::from_gamma(gamma, Complex64::new(1.0, 0.0)))
        }
        other => Err(EvalError::Unsupported(format!(
            "no Selberg-class data cataloged for {other}"
        ))),
    }
}
