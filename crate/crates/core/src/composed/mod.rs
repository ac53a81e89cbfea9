//! Composite zeta functions assembled from the kernels, each carried by a
//! [`FunctionHandle`]: the symmetric/antisymmetric Hurwitz and periodic
//! combinations
//!
//!   Z(s,a) = ζ(s,a) + ζ(s,1−a)        P(s,a) = Li_s(e^{2πia}) + Li_s(e^{2πi(1−a)})
//!   Y(s,a) = ζ(s,a) − ζ(s,1−a)        O(s,a) = −i(Li_s(e^{2πia}) − Li_s(e^{2πi(1−a)}))
//!   2Q(s,a) = Z(s,a) + P(s,a)         2X(s,a) = Y(s,a) + O(s,a)
//!
//! the Davenport–Heilbronn function, the character combination
//! f(s,χ) = q^s L(s,χ) + i^{−κ(χ)} G(χ) L(s,χ̄) together with
//! g(s,χ) = f(s,χ)·H(s,q), the Vaughan quotients V±, degree-2 products
//! q^{−s}ZP and q^{−s}YO, the quadratic-field product ζ(s)L(s,χ_D), and the
//! Dedekind-style exponent product with prefactor N^{−s/2}.
//!
//! Every handle knows its pole set, its functional-equation descriptor
//! ([`fe::FunctionalEquationSpec`]), and how to serialize itself.

pub mod fe;
pub mod relations;
pub mod selberg;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::gcd;
use serde::{Deserialize, Serialize};

use crate::characters::{
    enumerate_characters, gauss_sum, kronecker_character, lambda_chi, DirichletCharacter,
};
use crate::error::{EvalError, Result};
use crate::zeta::{
    dirichlet_l_many, hurwitz_zeta, hurwitz_zeta_deflated, periodic_zeta, riemann_zeta,
};
use crate::check_finite;

pub use fe::{fe_residual, fe_spec, FunctionalEquationSpec};
pub use relations::{verify_linear_relations, RelationRow, RelationsReport};
pub use selberg::{degree_conductor, selberg_descriptor, GammaFactorSpec, SelbergDescriptor};

/// Radius of the deflated-evaluation disk around s = 1 for the combinations
/// whose residue-class poles cancel.
const DEFLATE_RADIUS: f64 = 0.125;

/// An exact rational shift a = num/den in (0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 || num > den {
            return Err(EvalError::Domain(format!(
                "shift {num}/{den} outside (0, 1]"
            )));
        }
        let g = gcd(num, den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// 1 − a as an exact rational.
    pub fn complement(&self) -> Rational {
        if self.num == self.den {
            *self
        } else {
            Rational {
                num: self.den - self.num,
                den: self.den,
            }
        }
    }

    /// Parses "r/q"; plain decimals are rejected on purpose — the linear
    /// relation structure only exists at rational shifts.
    pub fn parse(text: &str) -> Result<Self> {
        let (num, den) = text
            .split_once('/')
            .ok_or_else(|| EvalError::Domain(format!("expected r/q, got {text:?}")))?;
        let num: u64 = num
            .trim()
            .parse()
            .map_err(|_| EvalError::Domain(format!("bad numerator in {text:?}")))?;
        let den: u64 = den
            .trim()
            .parse()
            .map_err(|_| EvalError::Domain(format!("bad denominator in {text:?}")))?;
        Rational::new(num, den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Rational::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// A character with everything its composites need precomputed.
#[derive(Debug)]
pub struct CharBundle {
    pub chi: DirichletCharacter,
    pub chi_bar: DirichletCharacter,
    pub gauss: Complex64,
    /// λ(χ) = G(χ)/(i^κ √q); unit modulus when χ is primitive.
    pub lambda: Complex64,
}

pub type CharRef = Arc<CharBundle>;

impl CharBundle {
    pub fn new(chi: DirichletCharacter) -> CharRef {
        let chi_bar = chi.conjugate();
        let gauss = gauss_sum(&chi).value;
        let lambda = lambda_chi(&chi).unwrap_or_else(|_| {
            let i_kappa = if chi.kappa() == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 1.0)
            };
            gauss / (i_kappa * (chi.modulus() as f64).sqrt())
        });
        Arc::new(CharBundle {
            chi,
            chi_bar,
            gauss,
            lambda,
        })
    }

    pub fn q(&self) -> u64 {
        self.chi.modulus()
    }

    pub fn kappa(&self) -> u8 {
        self.chi.kappa()
    }

    /// i^{−κ}: 1 for even χ, −i for odd.
    pub fn i_minus_kappa(&self) -> Complex64 {
        if self.chi.kappa() == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, -1.0)
        }
    }
}

/// Parameters of the Dedekind-style product
/// N^{−s/2}·Z^{l₁+l₂}(s,a₁)·P^{l₁+l₂}(s,a₂)·Q^{l₃+l₄}(s,a₃)·f^{l₅+l₆}(s,χev)
///        ·Y^{l₂}(s,a₄)·O^{l₂}(s,a₅)·X^{l₄}(s,a₆)·f^{l₆}(s,χod).
#[derive(Debug, Clone)]
pub struct DedekindParams {
    pub l: [u32; 6],
    pub a: [Rational; 6],
    pub chi_even: CharRef,
    pub chi_odd: CharRef,
    /// The prefactor constant N; any positive integer closes the functional
    /// equation, the default is the squared Dirichlet-series normalizer.
    pub n_scale: u64,
}

impl DedekindParams {
    /// Gamma exponents (r₁, r₂) = (2l₁+l₃+l₅, 2l₂+l₄+l₆) of the paired
    /// functional equation.
    pub fn gamma_exponents(&self) -> (u32, u32) {
        let [l1, l2, l3, l4, l5, l6] = self.l;
        (2 * l1 + l3 + l5, 2 * l2 + l4 + l6)
    }

    /// M² with M = q₁^{l₁+l₂} q₃^{l₃+l₄} q₄^{l₂} q₆^{l₄} q_ev^{l₅+l₆} q_od^{l₆}:
    /// M^{−s} times the product is an ordinary Dirichlet series, so N = M²
    /// matches the N^{−s/2} prefactor shape.
    pub fn default_n(l: &[u32; 6], a: &[Rational; 6], chi_even: &CharRef, chi_odd: &CharRef) -> u64 {
        let [l1, l2, l3, l4, l5, l6] = *l;
        let m = a[0].den().pow(l1 + l2)
            * a[2].den().pow(l3 + l4)
            * a[3].den().pow(l2)
            * a[5].den().pow(l4)
            * chi_even.q().pow(l5 + l6)
            * chi_odd.q().pow(l6);
        m * m
    }
}

/// Every composite function of the library, as an immutable, cheaply
/// cloneable handle. Construct through the checked builders.
#[derive(Debug, Clone)]
pub enum FunctionHandle {
    /// ζ(s)
    RawZeta,
    /// L(s,χ)
    RawL(CharRef),
    /// Z(s,a), 0 < a ≤ 1/2
    Z(Rational),
    /// P(s,a), 0 < a ≤ 1/2
    P(Rational),
    /// Y(s,a), 0 < a < 1/2 (a = 1/2 allowed, identically zero)
    Y(Rational),
    /// O(s,a), like Y
    O(Rational),
    /// Q(s,a) = (Z+P)/2
    QFun(Rational),
    /// X(s,a) = (Y+O)/2
    X(Rational),
    /// Davenport–Heilbronn f(s)
    Dh,
    /// f(s,χ) = q^s L(s,χ) + i^{−κ}G(χ)L(s,χ̄), χ primitive
    FChi(CharRef),
    /// g(s,χ) = f(s,χ)·H(s,q)
    GChi(CharRef),
    /// V₊(s) = (L(s,χ) + λL(s,χ̄))/(1+λ)
    VPlus(CharRef),
    /// V₋(s) = (L(s,χ) − λL(s,χ̄))/(1−λ)
    VMinus(CharRef),
    /// q^{−s} Z(s,r/q) P(s,r/q), q ≥ 2
    SelbergEven(Rational),
    /// q^{−s} Y(s,r/q) O(s,r/q), q ≥ 3
    SelbergOdd(Rational),
    /// ζ(s)·L(s,χ_D) for a fundamental discriminant D
    QuadDedekind { d: i64, chi: CharRef },
    /// N^{−s/2} × exponent product of the six families and two f's
    DedekindComposite(Arc<DedekindParams>),
}

fn require_primitive(chi: &DirichletCharacter) -> Result<()> {
    if chi.is_primitive() {
        Ok(())
    } else {
        Err(EvalError::NonPrimitive {
            modulus: chi.modulus() as u32,
            label: chi.label() as u32,
        })
    }
}

impl FunctionHandle {
    pub fn zeta() -> Self {
        FunctionHandle::RawZeta
    }

    pub fn raw_l(chi: DirichletCharacter) -> Self {
        FunctionHandle::RawL(CharBundle::new(chi))
    }

    fn half_shift(a: Rational, strict: bool, name: &str) -> Result<Rational> {
        if 2 * a.num() > a.den() {
            return Err(EvalError::Domain(format!(
                "{name} needs a ≤ 1/2, got {a}"
            )));
        }
        if strict && 2 * a.num() == a.den() {
            // identically-zero degenerate point; allowed but flagged later
        }
        Ok(a)
    }

    pub fn z(a: Rational) -> Result<Self> {
        Ok(FunctionHandle::Z(Self::half_shift(a, false, "Z")?))
    }

    pub fn p(a: Rational) -> Result<Self> {
        Ok(FunctionHandle::P(Self::half_shift(a, false, "P")?))
    }

    pub fn y(a: Rational) -> Result<Self> {
        Ok(FunctionHandle::Y(Self::half_shift(a, true, "Y")?))
    }

    pub fn o(a: Rational) -> Result<Self> {
        Ok(FunctionHandle::O(Self::half_shift(a, true, "O")?))
    }

    pub fn q_fun(a: Rational) -> Result<Self> {
        Ok(FunctionHandle::QFun(Self::half_shift(a, false, "Q")?))
    }

    pub fn x(a: Rational) -> Result<Self> {
        Ok(FunctionHandle::X(Self::half_shift(a, true, "X")?))
    }

    pub fn dh() -> Self {
        FunctionHandle::Dh
    }

    pub fn f_chi(chi: DirichletCharacter) -> Result<Self> {
        require_primitive(&chi)?;
        if chi.modulus() < 3 {
            return Err(EvalError::Domain(
                "f(s,χ) needs a primitive character mod q ≥ 3".into(),
            ));
        }
        Ok(FunctionHandle::FChi(CharBundle::new(chi)))
    }

    pub fn g_chi(chi: DirichletCharacter) -> Result<Self> {
        require_primitive(&chi)?;
        if chi.modulus() < 3 {
            return Err(EvalError::Domain(
                "g(s,χ) needs a primitive character mod q ≥ 3".into(),
            ));
        }
        Ok(FunctionHandle::GChi(CharBundle::new(chi)))
    }

    fn vaughan(chi: DirichletCharacter, plus: bool) -> Result<Self> {
        require_primitive(&chi)?;
        if chi.modulus() < 3 {
            return Err(EvalError::Domain(
                "V± needs a primitive character mod q ≥ 3".into(),
            ));
        }
        let bundle = CharBundle::new(chi);
        // joint condition: both quotients must exist
        if (bundle.lambda + 1.0).norm() < 1e-9
            || (Complex64::new(1.0, 0.0) - bundle.lambda).norm() < 1e-9
        {
            return Err(EvalError::Domain(format!(
                "V± requires λ(χ) ≠ ±1, got λ = {}",
                bundle.lambda
            )));
        }
        Ok(if plus {
            FunctionHandle::VPlus(bundle)
        } else {
            FunctionHandle::VMinus(bundle)
        })
    }

    pub fn v_plus(chi: DirichletCharacter) -> Result<Self> {
        Self::vaughan(chi, true)
    }

    pub fn v_minus(chi: DirichletCharacter) -> Result<Self> {
        Self::vaughan(chi, false)
    }

    pub fn selberg_even(a: Rational) -> Result<Self> {
        if a.den() < 2 {
            return Err(EvalError::Domain("ζ_S^ev needs q ≥ 2".into()));
        }
        Ok(FunctionHandle::SelbergEven(Self::half_shift(a, false, "ζ_S^ev")?))
    }

    pub fn selberg_odd(a: Rational) -> Result<Self> {
        if a.den() < 3 {
            return Err(EvalError::Domain("ζ_S^od needs q ≥ 3".into()));
        }
        Ok(FunctionHandle::SelbergOdd(Self::half_shift(a, true, "ζ_S^od")?))
    }

    pub fn quad_dedekind(d: i64) -> Result<Self> {
        let chi = kronecker_character(d)?;
        Ok(FunctionHandle::QuadDedekind {
            d,
            chi: CharBundle::new(chi),
        })
    }

    /// Dedekind-style exponent product. `n_scale = None` picks the default
    /// normalizer; exponents are bounded by 3 and must satisfy
    /// min{2l₁+l₃+l₅, 2l₂+l₄+l₆} ≥ 1.
    pub fn dedekind_composite(
        l: [u32; 6],
        a: [Rational; 6],
        chi_even: DirichletCharacter,
        chi_odd: DirichletCharacter,
        n_scale: Option<u64>,
    ) -> Result<Self> {
        if l.iter().any(|&li| li > 3) {
            return Err(EvalError::Domain(
                "exponents l_i are bounded by 3".into(),
            ));
        }
        let r1 = 2 * l[0] + l[2] + l[4];
        let r2 = 2 * l[1] + l[3] + l[5];
        if r1.min(r2) < 1 {
            return Err(EvalError::Domain(
                "need min{2l₁+l₃+l₅, 2l₂+l₄+l₆} ≥ 1".into(),
            ));
        }
        for (i, ai) in a.iter().enumerate() {
            let strict = i >= 3;
            if 2 * ai.num() > ai.den() || (strict && 2 * ai.num() == ai.den()) {
                return Err(EvalError::Domain(format!(
                    "slot a{} = {ai} outside its range",
                    i + 1
                )));
            }
            if strict && ai.den() < 3 {
                return Err(EvalError::Domain(format!(
                    "slot a{} needs denominator ≥ 3",
                    i + 1
                )));
            }
        }
        require_primitive(&chi_even)?;
        require_primitive(&chi_odd)?;
        if chi_even.kappa() != 0 || chi_odd.kappa() != 1 {
            return Err(EvalError::Domain(
                "character slots demand one even and one odd primitive character".into(),
            ));
        }
        let chi_even = CharBundle::new(chi_even);
        let chi_odd = CharBundle::new(chi_odd);
        let n_scale =
            n_scale.unwrap_or_else(|| DedekindParams::default_n(&l, &a, &chi_even, &chi_odd));
        if n_scale == 0 {
            return Err(EvalError::Domain("N must be a positive integer".into()));
        }
        Ok(FunctionHandle::DedekindComposite(Arc::new(DedekindParams {
            l,
            a,
            chi_even,
            chi_odd,
            n_scale,
        })))
    }

    /// Wire name of the handle kind.
    pub fn kind_name(&self) -> &'static str {
        match self {
            FunctionHandle::RawZeta => "rawzeta",
            FunctionHandle::RawL(_) => "rawl",
            FunctionHandle::Z(_) => "z",
            FunctionHandle::P(_) => "p",
            FunctionHandle::Y(_) => "y",
            FunctionHandle::O(_) => "o",
            FunctionHandle::QFun(_) => "q",
            FunctionHandle::X(_) => "x",
            FunctionHandle::Dh => "dh",
            FunctionHandle::FChi(_) => "fchi",
            FunctionHandle::GChi(_) => "gchi",
            FunctionHandle::VPlus(_) => "vplus",
            FunctionHandle::VMinus(_) => "vminus",
            FunctionHandle::SelbergEven(_) => "selbergev",
            FunctionHandle::SelbergOdd(_) => "selbergod",
            FunctionHandle::QuadDedekind { .. } => "zk",
            FunctionHandle::DedekindComposite(_) => "zd",
        }
    }

    /// True when the handle denotes the identically-zero function
    /// (Y, O, X at a = 1/2).
    pub fn is_identically_zero(&self) -> bool {
        match self {
            FunctionHandle::Y(a) | FunctionHandle::O(a) | FunctionHandle::X(a) => {
                2 * a.num() == a.den()
            }
            _ => false,
        }
    }

    /// Modulus-like scale governing the oscillation rate q^{it}; used by the
    /// zero counter to pick its initial contour step.
    pub fn oscillation_modulus(&self) -> u64 {
        match self {
            FunctionHandle::RawZeta => 1,
            FunctionHandle::RawL(c) | FunctionHandle::VPlus(c) | FunctionHandle::VMinus(c) => {
                c.q()
            }
            FunctionHandle::FChi(c) | FunctionHandle::GChi(c) => c.q(),
            FunctionHandle::Z(a)
            | FunctionHandle::P(a)
            | FunctionHandle::Y(a)
            | FunctionHandle::O(a)
            | FunctionHandle::QFun(a)
            | FunctionHandle::X(a) => a.den(),
            FunctionHandle::Dh => 5,
            FunctionHandle::SelbergEven(a) | FunctionHandle::SelbergOdd(a) => a.den().pow(2),
            FunctionHandle::QuadDedekind { d, .. } => d.unsigned_abs(),
            FunctionHandle::DedekindComposite(p) => p.n_scale.max(2),
        }
    }

    /// Poles inside the open rectangle (simple poles, listed with
    /// multiplicity one per point).
    pub fn poles_in(&self, sigma1: f64, sigma2: f64, t1: f64, t2: f64) -> Vec<Complex64> {
        let mut out = Vec::new();
        let one_inside =
            |out: &mut Vec<Complex64>| {
                if sigma1 < 1.0 && 1.0 < sigma2 && t1 < 0.0 && 0.0 < t2 {
                    out.push(Complex64::new(1.0, 0.0));
                }
            };
        match self {
            FunctionHandle::RawZeta
            | FunctionHandle::Z(_)
            | FunctionHandle::QFun(_)
            | FunctionHandle::SelbergEven(_)
            | FunctionHandle::QuadDedekind { .. } => one_inside(&mut out),
            FunctionHandle::RawL(c) => {
                if c.chi.is_principal() {
                    one_inside(&mut out);
                }
            }
            FunctionHandle::DedekindComposite(p) => {
                let [l1, l2, l3, l4, _, _] = p.l;
                if l1 + l2 + l3 + l4 > 0 {
                    one_inside(&mut out);
                }
            }
            FunctionHandle::GChi(c) => {
                // poles of H(s,q): s = 1/2 + iπ(2k+1)/(2 ln q)
                let ln_q = (c.q() as f64).ln();
                if sigma1 < 0.5 && 0.5 < sigma2 {
                    let step = std::f64::consts::PI / ln_q;
                    let first = std::f64::consts::FRAC_PI_2 / ln_q;
                    let mut k = ((t1 - first) / step).floor() as i64 - 1;
                    loop {
                        let t = first + step * k as f64;
                        if t > t2 {
                            break;
                        }
                        if t > t1 {
                            out.push(Complex64::new(0.5, t));
                        }
                        k += 1;
                    }
                }
            }
            _ => {}
        }
        out
    }

    /// Distance from s to the nearest pole of the handle.
    pub fn pole_distance(&self, s: Complex64) -> f64 {
        let pad = 1.0;
        self.poles_in(s.re - pad, s.re + pad, s.im - pad, s.im + pad)
            .into_iter()
            .map(|p| (s - p).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Evaluates the handle at s.
    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        check_finite(s)?;
        match self {
            FunctionHandle::RawZeta => riemann_zeta(s),
            FunctionHandle::RawL(c) => Ok(dirichlet_l_many(s, &[&c.chi])?[0]),
            FunctionHandle::Z(a) => eval_z(s, *a),
            FunctionHandle::P(a) => eval_p(s, *a),
            FunctionHandle::Y(a) => eval_y(s, *a),
            FunctionHandle::O(a) => eval_o(s, *a),
            FunctionHandle::QFun(a) => Ok((eval_z(s, *a)? + eval_p(s, *a)?) / 2.0),
            FunctionHandle::X(a) => Ok((eval_y(s, *a)? + eval_o(s, *a)?) / 2.0),
            FunctionHandle::Dh => eval_dh(s),
            FunctionHandle::FChi(c) => eval_f_chi(s, c),
            FunctionHandle::GChi(c) => Ok(eval_f_chi(s, c)? * h_factor(s, c.q())?),
            FunctionHandle::VPlus(c) => {
                let (l, lbar) = l_pair(s, c)?;
                Ok((l + c.lambda * lbar) / (c.lambda + 1.0))
            }
            FunctionHandle::VMinus(c) => {
                let (l, lbar) = l_pair(s, c)?;
                Ok((l - c.lambda * lbar) / (Complex64::new(1.0, 0.0) - c.lambda))
            }
            FunctionHandle::SelbergEven(a) => {
                let q = a.den() as f64;
                Ok(cpow(q, -s) * eval_z(s, *a)? * eval_p(s, *a)?)
            }
            FunctionHandle::SelbergOdd(a) => {
                let q = a.den() as f64;
                Ok(cpow(q, -s) * eval_y(s, *a)? * eval_o(s, *a)?)
            }
            FunctionHandle::QuadDedekind { chi, .. } => {
                let z = riemann_zeta(s)?;
                let l = dirichlet_l_many(s, &[&chi.chi])?[0];
                Ok(z * l)
            }
            FunctionHandle::DedekindComposite(p) => eval_dedekind(s, p),
        }
    }
}

pub(crate) fn cpow(base: f64, s: Complex64) -> Complex64 {
    // base^s for base > 0
    let ln = base.ln();
    let e = (s.re * ln).exp();
    let (sin, cos) = (s.im * ln).sin_cos();
    Complex64::new(e * cos, e * sin)
}

fn eval_z(s: Complex64, a: Rational) -> Result<Complex64> {
    let af = a.as_f64();
    Ok(hurwitz_zeta(s, af)? + hurwitz_zeta(s, a.complement().as_f64())?)
}

fn eval_p(s: Complex64, a: Rational) -> Result<Complex64> {
    let af = a.as_f64();
    Ok(periodic_zeta(s, af)? + periodic_zeta(s, a.complement().as_f64())?)
}

fn eval_y(s: Complex64, a: Rational) -> Result<Complex64> {
    if 2 * a.num() == a.den() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let af = a.as_f64();
    let bf = a.complement().as_f64();
    if (s - 1.0).norm() < DEFLATE_RADIUS {
        // the two simple poles cancel; build from deflated kernels
        Ok(hurwitz_zeta_deflated(s, af)? - hurwitz_zeta_deflated(s, bf)?)
    } else {
        Ok(hurwitz_zeta(s, af)? - hurwitz_zeta(s, bf)?)
    }
}

fn eval_o(s: Complex64, a: Rational) -> Result<Complex64> {
    if 2 * a.num() == a.den() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let af = a.as_f64();
    let diff = periodic_zeta(s, af)? - periodic_zeta(s, a.complement().as_f64())?;
    Ok(Complex64::new(0.0, -1.0) * diff)
}

fn l_pair(s: Complex64, c: &CharBundle) -> Result<(Complex64, Complex64)> {
    let pair = dirichlet_l_many(s, &[&c.chi, &c.chi_bar])?;
    Ok((pair[0], pair[1]))
}

fn eval_f_chi(s: Complex64, c: &CharBundle) -> Result<Complex64> {
    let (l, lbar) = l_pair(s, c)?;
    Ok(cpow(c.q() as f64, s) * l + c.i_minus_kappa() * c.gauss * lbar)
}

/// H(s,q) = (q^s + q^{1−s})^{−1}; symmetric under s ↔ 1−s by construction.
pub fn h_factor(s: Complex64, q: u64) -> Result<Complex64> {
    check_finite(s)?;
    if q < 2 {
        return Err(EvalError::Domain("H(s,q) needs q ≥ 2".into()));
    }
    let qf = q as f64;
    let den = cpow(qf, s) + cpow(qf, Complex64::new(1.0, 0.0) - s);
    let scale = qf.powf(s.re) + qf.powf(1.0 - s.re);
    if den.norm() < 1e-12 * scale {
        return Err(EvalError::Pole(s));
    }
    Ok(den.inv())
}

/// Constants of the Davenport–Heilbronn combination, derived from
/// tan θ = ξ = (√5 − 1)^{−1}(√(10 − 2√5) − 2) at every call site.
#[derive(Debug, Clone, Copy)]
pub struct DhConstants {
    pub theta: f64,
    pub xi: f64,
    pub tan_theta: f64,
    pub sec_theta: f64,
}

pub fn dh_constants() -> DhConstants {
    let root5 = 5.0f64.sqrt();
    let xi = ((10.0 - 2.0 * root5).sqrt() - 2.0) / (root5 - 1.0);
    let theta = xi.atan();
    DhConstants {
        theta,
        xi,
        tan_theta: xi,
        sec_theta: 1.0 / theta.cos(),
    }
}

/// The two conjugate non-real (odd) characters mod 5, in the order matching
/// coefficient sequences (1, i, −i, −1, 0) and (1, −i, i, −1, 0).
pub fn dh_characters() -> (DirichletCharacter, DirichletCharacter) {
    let chars = enumerate_characters(5).expect("mod 5 enumeration");
    let chi1 = chars
        .iter()
        .find(|c| {
            c.turn(2)
                .map(|f| f.num == 1 && f.den == 4)
                .unwrap_or(false)
        })
        .expect("character with χ(2) = i")
        .clone();
    let chi2 = chi1.conjugate();
    (chi1, chi2)
}

fn eval_dh(s: Complex64) -> Result<Complex64> {
    let k = dh_constants();
    let (chi1, chi2) = dh_characters();
    let ls = dirichlet_l_many(s, &[&chi1, &chi2])?;
    let e_m = Complex64::new(0.0, -k.theta).exp();
    let e_p = Complex64::new(0.0, k.theta).exp();
    Ok(k.sec_theta / 2.0 * (e_m * ls[0] + e_p * ls[1]))
}

/// The Davenport–Heilbronn function as a Hurwitz combination:
/// f(s) = 5^{−s}(ζ(s,1/5) + tanθ·ζ(s,2/5) − tanθ·ζ(s,3/5) − ζ(s,4/5)).
pub fn dh_hurwitz_form(s: Complex64) -> Result<Complex64> {
    check_finite(s)?;
    let k = dh_constants();
    let weights = [1.0, k.tan_theta, -k.tan_theta, -1.0];
    let mut acc = Complex64::new(0.0, 0.0);
    let deflate = (s - 1.0).norm() < DEFLATE_RADIUS;
    for (i, w) in weights.iter().enumerate() {
        let a = (i as f64 + 1.0) / 5.0;
        let term = if deflate {
            hurwitz_zeta_deflated(s, a)?
        } else {
            hurwitz_zeta(s, a)?
        };
        acc += *w * term;
    }
    Ok(cpow(5.0, -s) * acc)
}

/// Coefficients (μ, ν) with f(s) = μ·O(s,1/5) + ν·O(s,2/5), obtained by
/// matching the period-5 coefficient sequences: the n ≡ 1, 2 rows give
///
///   2 sin(2π/5)·μ + 2 sin(4π/5)·ν = 1
///   2 sin(4π/5)·μ + 2 sin(8π/5)·ν = tan θ
///
/// solved by direct elimination (the solution is (1/√5, tanθ/√5)).
pub fn dh_mu_nu() -> (f64, f64) {
    let k = dh_constants();
    let s2 = (2.0 * std::f64::consts::PI / 5.0).sin();
    let s4 = (4.0 * std::f64::consts::PI / 5.0).sin();
    let s8 = (8.0 * std::f64::consts::PI / 5.0).sin();
    let (a11, a12, b1) = (2.0 * s2, 2.0 * s4, 1.0);
    let (a21, a22, b2) = (2.0 * s4, 2.0 * s8, k.tan_theta);
    let factor = a21 / a11;
    let nu = (b2 - factor * b1) / (a22 - factor * a12);
    let mu = (b1 - a12 * nu) / a11;
    (mu, nu)
}

fn eval_dedekind(s: Complex64, p: &DedekindParams) -> Result<Complex64> {
    let [l1, l2, l3, l4, l5, l6] = p.l;
    let mut acc = cpow(p.n_scale as f64, -s / 2.0);
    let push = |v: Complex64, e: u32, acc: &mut Complex64| {
        if e > 0 {
            *acc *= v.powu(e);
        }
    };
    push(eval_z(s, p.a[0])?, l1 + l2, &mut acc);
    push(eval_p(s, p.a[1])?, l1 + l2, &mut acc);
    push(
        {
            let z = eval_z(s, p.a[2])?;
            let pp = eval_p(s, p.a[2])?;
            (z + pp) / 2.0
        },
        l3 + l4,
        &mut acc,
    );
    push(eval_f_chi(s, &p.chi_even)?, l5 + l6, &mut acc);
    push(eval_y(s, p.a[3])?, l2, &mut acc);
    push(eval_o(s, p.a[4])?, l2, &mut acc);
    push(
        {
            let y = eval_y(s, p.a[5])?;
            let o = eval_o(s, p.a[5])?;
            (y + o) / 2.0
        },
        l4,
        &mut acc,
    );
    push(eval_f_chi(s, &p.chi_odd)?, l6, &mut acc);
    Ok(acc)
}

/// Wire representation of a handle:
/// `{kind, a: "r/q", chi: {q, label}, l: [...], n}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HandleSpec {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<ChiSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_odd: Option<ChiSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_slots: Option<Vec<Rational>>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChiSpec {
    pub q: u64,
    pub label: u64,
}

impl FunctionHandle {
    pub fn to_spec(&self) -> HandleSpec {
        let mut spec = HandleSpec {
            kind: self.kind_name().to_string(),
            a: None,
            chi: None,
            chi_odd: None,
            l: None,
            a_slots: None,
            n: None,
            d: None,
        };
        match self {
            FunctionHandle::Z(a)
            | FunctionHandle::P(a)
            | FunctionHandle::Y(a)
            | FunctionHandle::O(a)
            | FunctionHandle::QFun(a)
            | FunctionHandle::X(a)
            | FunctionHandle::SelbergEven(a)
            | FunctionHandle::SelbergOdd(a) => spec.a = Some(*a),
            FunctionHandle::RawL(c)
            | FunctionHandle::FChi(c)
            | FunctionHandle::GChi(c)
            | FunctionHandle::VPlus(c)
            | FunctionHandle::VMinus(c) => {
                spec.chi = Some(ChiSpec {
                    q: c.q(),
                    label: c.chi.label(),
                })
            }
            FunctionHandle::QuadDedekind { d, .. } => spec.d = Some(*d),
            FunctionHandle::DedekindComposite(p) => {
                spec.l = Some(p.l.to_vec());
                spec.a_slots = Some(p.a.to_vec());
                spec.chi = Some(ChiSpec {
                    q: p.chi_even.q(),
                    label: p.chi_even.chi.label(),
                });
                spec.chi_odd = Some(ChiSpec {
                    q: p.chi_odd.q(),
                    label: p.chi_odd.chi.label(),
                });
                spec.n = Some(p.n_scale);
            }
            FunctionHandle::RawZeta | FunctionHandle::Dh => {}
        }
        spec
    }
}

impl HandleSpec {
    pub fn build(&self) -> Result<FunctionHandle> {
        let need_a = || {
            self.a
                .ok_or_else(|| EvalError::Domain(format!("handle {} needs a = r/q", self.kind)))
        };
        let need_chi = || -> Result<DirichletCharacter> {
            let c = self
                .chi
                .as_ref()
                .ok_or_else(|| EvalError::Domain(format!("handle {} needs chi", self.kind)))?;
            crate::characters::character_by_label(c.q, c.label)
        };
        match self.kind.as_str() {
            "rawzeta" => Ok(FunctionHandle::RawZeta),
            "rawl" => Ok(FunctionHandle::raw_l(need_chi()?)),
            "z" => FunctionHandle::z(need_a()?),
            "p" => FunctionHandle::p(need_a()?),
            "y" => FunctionHandle::y(need_a()?),
            "o" => FunctionHandle::o(need_a()?),
            "q" => FunctionHandle::q_fun(need_a()?),
            "x" => FunctionHandle::x(need_a()?),
            "dh" => Ok(FunctionHandle::Dh),
            "fchi" => FunctionHandle::f_chi(need_chi()?),
            "gchi" => FunctionHandle::g_chi(need_chi()?),
            "vplus" => FunctionHandle::v_plus(need_chi()?),
            "vminus" => FunctionHandle::v_minus(need_chi()?),
            "selbergev" => FunctionHandle::selberg_even(need_a()?),
            "selbergod" => FunctionHandle::selberg_odd(need_a()?),
            "zk" => {
                let d = self
                    .d
                    .ok_or_else(|| EvalError::Domain("handle zk needs d".into()))?;
                FunctionHandle::quad_dedekind(d)
            }
            "zd" => {
                let l: [u32; 6] = self
                    .l
                    .clone()
                    .and_then(|v| v.try_into().ok())
                    .ok_or_else(|| EvalError::Domain("handle zd needs l with 6 entries".into()))?;
                let a: [Rational; 6] = self
                    .a_slots
                    .clone()
                    .and_then(|v| v.try_into().ok())
                    .ok_or_else(|| {
                        EvalError::Domain("handle zd needs a_slots with 6 entries".into())
                    })?;
                let chi_even = need_chi()?;
                let co = self
                    .chi_odd
                    .as_ref()
                    .ok_or_else(|| EvalError::Domain("handle zd needs chi_odd".into()))?;
                let chi_odd = crate::characters::character_by_label(co.q, co.label)?;
                FunctionHandle::dedekind_composite(l, a, chi_even, chi_odd, self.n)
            }
            other => Err(EvalError::Domain(format!("unknown handle kind {other:?}"))),
        }
    }
}

impl fmt::Display for FunctionHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionHandle::RawZeta => write!(f, "zeta"),
            FunctionHandle::RawL(c) => write!(f, "L[q={},label={}]", c.q(), c.chi.label()),
            FunctionHandle::Z(a) => write!(f, "Z[a={a}]"),
            FunctionHandle::P(a) => write!(f, "P[a={a}]"),
            FunctionHandle::Y(a) => write!(f, "Y[a={a}]"),
            FunctionHandle::O(a) => write!(f, "O[a={a}]"),
            FunctionHandle::QFun(a) => write!(f, "Q[a={a}]"),
            FunctionHandle::X(a) => write!(f, "X[a={a}]"),
            FunctionHandle::Dh => write!(f, "DH"),
            FunctionHandle::FChi(c) => write!(f, "f[q={},label={}]", c.q(), c.chi.label()),
            FunctionHandle::GChi(c) => write!(f, "g[q={},label={}]", c.q(), c.chi.label()),
            FunctionHandle::VPlus(c) => write!(f, "V+[q={},label={}]", c.q(), c.chi.label()),
            FunctionHandle::VMinus(c) => write!(f, "V-[q={},label={}]", c.q(), c.chi.label()),
            FunctionHandle::SelbergEven(a) => write!(f, "zSev[a={a}]"),
            FunctionHandle::SelbergOdd(a) => write!(f, "zSod[a={a}]"),
            FunctionHandle::QuadDedekind { d, .. } => write!(f, "zK[D={d}]"),
            FunctionHandle::DedekindComposite(p) => {
                write!(f, "zD[l={:?},N={}]", p.l, p.n_scale)
            }
        }
    }
}

#[cfg(test)]
mod tests;
