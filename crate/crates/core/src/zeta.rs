//! Core analytic continuations: the Hurwitz zeta function ζ(s,a), the
//! periodic zeta function Li_s(e^{2πia}), the Riemann zeta function, and
//! Dirichlet L-functions.
//!
//! ζ(s,a) = Σ_{n≥0} (n+a)^{−s} is continued by Euler–Maclaurin summation for
//! σ ≥ −1/2 and through
//!
//!   ζ(s,a) = Γπ(1−s)·(e^{−πi(1−s)/2} Li_{1−s}(e^{2πia})
//!                     + e^{πi(1−s)/2} Li_{1−s}(e^{2πi(1−a)}))
//!
//! below that, with the exponentials folded into log space. Li_s(e^{2πia})
//! uses a direct series for σ ≥ 1.25 (grouped by residue class for rational
//! a, or an oscillatory Euler–Maclaurin tail otherwise) and the mirror
//! relation
//!
//!   Li_s(e^{2πia}) = Γπ(1−s)·(e^{πi(1−s)/2} ζ(1−s,a)
//!                             + e^{−πi(1−s)/2} ζ(1−s,1−a))
//!
//! for σ < 1.25. The two routes agree on the overlap band 1.25 ≤ σ ≤ 2,
//! which is pinned by tests. L(s,χ) = q^{−s} Σ_r χ(r) ζ(s, r/q).
//!
//! The certified window is σ ∈ [−10, 12], |t| ≤ 400 ([`EvalDomain`]); the
//! accuracy contract everywhere is relative to max(|value|, 1).

use std::cell::RefCell;
use std::collections::HashMap;

use num_complex::Complex64;

use crate::characters::DirichletCharacter;
use crate::error::{EvalError, Result};
use crate::gamma::log_gamma_pi;
use crate::check_finite;

/// Bernoulli numbers B₂, B₄, …, B₆₀ as exact rationals rendered to doubles.
pub const BERNOULLI_2K: [f64; 30] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
    1520097643918070802691.0 / 1806.0,
    -27833269579301024235023.0 / 690.0,
    596451111593912163277961.0 / 282.0,
    -5609403368997817686249127547.0 / 46410.0,
    495057205241079648212477525.0 / 66.0,
    -801165718135489957347924991853.0 / 1590.0,
    29149963634884862421418123812691.0 / 798.0,
    -2479392929313226753685415739663229.0 / 870.0,
    84483613348880041862046775994036021.0 / 354.0,
    -1215233140483755572040304994079820246041491.0 / 56786730.0,
];

/// Number of Bernoulli terms in the Euler–Maclaurin tail.
const EM_TERMS: usize = 12;
/// Euler–Maclaurin applies directly for σ ≥ this; the reflection route below.
const EM_MIN_SIGMA: f64 = -0.5;
/// Periodic zeta switches from the direct series to the mirror relation here.
const PERIODIC_DIRECT_MIN_SIGMA: f64 = 1.25;
/// Largest denominator for which a rational shift is expanded into Hurwitz
/// zetas residue class by residue class.
const RATIONAL_DEN_LIMIT: u64 = 512;

/// Truncation policy of one Euler–Maclaurin evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzParams {
    /// Shift a ∈ (0, 1].
    pub shift: f64,
    /// Series length N before the tail corrections.
    pub em_terms: usize,
    /// Number of Bernoulli terms M (≤ 30; the kernel uses 12).
    pub bernoulli_terms: usize,
}

impl HurwitzParams {
    /// The policy the kernel applies at s: N = max(⌈|t|/2⌉, 15) + 10, M = 12.
    pub fn for_point(s: Complex64, shift: f64) -> Self {
        HurwitzParams {
            shift,
            em_terms: (s.im.abs() / 2.0).ceil().max(15.0) as usize + 10,
            bernoulli_terms: EM_TERMS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.shift > 0.0 && self.shift <= 1.0) {
            return Err(EvalError::Domain(format!(
                "shift {} outside (0, 1]",
                self.shift
            )));
        }
        if self.bernoulli_terms > BERNOULLI_2K.len() {
            return Err(EvalError::Domain(format!(
                "at most {} Bernoulli terms are tabulated",
                BERNOULLI_2K.len()
            )));
        }
        Ok(())
    }
}

/// The certified accuracy window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalDomain {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub t_max: f64,
}

impl Default for EvalDomain {
    fn default() -> Self {
        EvalDomain {
            sigma_min: -10.0,
            sigma_max: 12.0,
            t_max: 400.0,
        }
    }
}

impl EvalDomain {
    pub fn contains(&self, s: Complex64) -> bool {
        s.re >= self.sigma_min && s.re <= self.sigma_max && s.im.abs() <= self.t_max
    }

    pub fn check(&self, s: Complex64) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(EvalError::Accuracy(format!(
                "s = {s} outside certified window σ ∈ [{}, {}], |t| ≤ {}",
                self.sigma_min, self.sigma_max, self.t_max
            )))
        }
    }
}

/// Which continuation route an evaluation takes; reported as provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelRoute {
    EulerMaclaurin,
    Reflection,
    DirectSeries,
    MirrorEquation,
    ClosedFormLog,
}

/// Route the Hurwitz kernel takes at s.
pub fn hurwitz_route(s: Complex64) -> KernelRoute {
    if s.re >= EM_MIN_SIGMA {
        KernelRoute::EulerMaclaurin
    } else {
        KernelRoute::Reflection
    }
}

/// Route the periodic kernel takes at s (for shift a < 1).
pub fn periodic_route(s: Complex64) -> KernelRoute {
    if (s - 1.0).norm() <= 1e-8 {
        KernelRoute::ClosedFormLog
    } else if s.re >= PERIODIC_DIRECT_MIN_SIGMA {
        KernelRoute::DirectSeries
    } else {
        KernelRoute::MirrorEquation
    }
}

thread_local! {
    /// ln(n + a) tables keyed by the bits of a; the Euler–Maclaurin main sum
    /// spends most of its time in these logs.
    static LN_TABLE: RefCell<HashMap<u64, Vec<f64>>> = RefCell::new(HashMap::new());
}

fn with_ln_table<R>(a: f64, len: usize, f: impl FnOnce(&[f64]) -> R) -> R {
    LN_TABLE.with(|cell| {
        let mut map = cell.borrow_mut();
        if map.len() > 64 {
            map.clear();
        }
        let table = map.entry(a.to_bits()).or_default();
        while table.len() < len {
            let n = table.len() as f64;
            table.push((n + a).ln());
        }
        f(&table[..len])
    })
}

/// (n+a)^{−s} for n = 0..N−1, summed. Terms are exp(−s·ln(n+a)).
fn power_sum(s: Complex64, a: f64, n_terms: usize) -> Complex64 {
    with_ln_table(a, n_terms, |lns| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &ln in lns {
            let e = (-s.re * ln).exp();
            let (sin, cos) = (-s.im * ln).sin_cos();
            acc += Complex64::new(e * cos, e * sin);
        }
        acc
    })
}

fn cpow_real_base(base_ln: f64, s: Complex64) -> Complex64 {
    // base^s = exp(s·ln base) for base > 0.
    let e = (s.re * base_ln).exp();
    let (sin, cos) = (s.im * base_ln).sin_cos();
    Complex64::new(e * cos, e * sin)
}

/// Euler–Maclaurin evaluation of ζ(s,a), valid for σ ≥ EM_MIN_SIGMA.
///
/// With `deflate` set the simple pole is subtracted: the result is
/// ζ(s,a) − 1/(s−1), which stays analytic through s = 1. The combinations
/// that are entire at s = 1 (Y, O, X, non-principal L) are assembled from
/// deflated terms there, so no 0·∞ cancellation ever reaches f64.
fn hurwitz_em_inner(s: Complex64, a: f64, deflate: bool) -> Complex64 {
    let params = HurwitzParams::for_point(s, a);
    let n = params.em_terms;
    let main = power_sum(s, a, n);
    let x = n as f64 + a;
    let ln_x = x.ln();
    let x_pow_minus_s = cpow_real_base(ln_x, -s);

    // ∫_N^∞ (x+a)^{−s} dx = (N+a)^{1−s}/(s−1); deflated variant subtracts
    // 1/(s−1) via ((N+a)^{1−s} − 1)/(s−1) = −ln(N+a)·expm1(w)/w.
    let integral = if deflate {
        // ((N+a)^{1−s} − 1)/(s−1) with w = (1−s)ln(N+a) equals −ln(N+a)·(e^w−1)/w
        let w = (Complex64::new(1.0, 0.0) - s) * ln_x;
        -ln_x * expm1_over(w)
    } else {
        x_pow_minus_s * x / (s - 1.0)
    };
    let half = x_pow_minus_s * 0.5;

    // Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k−2) · (N+a)^{−s−2k+1}
    let mut tail = Complex64::new(0.0, 0.0);
    let mut poch = s; // s(s+1)…(s+2k−2), starts at k=1 as just s
    let mut fact = 2.0; // (2k)!
    let mut x_pow = x_pow_minus_s / x; // (N+a)^{−s−2k+1}
    for k in 1..=params.bernoulli_terms {
        tail += BERNOULLI_2K[k - 1] / fact * poch * x_pow;
        // advance to k+1
        let m = (2 * k) as f64;
        fact *= (m + 1.0) * (m + 2.0);
        poch *= (s + m - 1.0) * (s + m);
        x_pow /= x * x;
    }
    main + integral + half + tail
}

fn hurwitz_em(s: Complex64, a: f64) -> Complex64 {
    hurwitz_em_inner(s, a, false)
}

/// (e^w − 1)/w, stable for small |w|.
fn expm1_over(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        // w/2 + w²/6 + w³/24 …
        Complex64::new(1.0, 0.0) + w * 0.5 + w * w / 6.0 + w * w * w / 24.0
    } else {
        let em1 = Complex64::new(
            w.re.exp_m1() * w.im.cos() - 2.0 * (w.im / 2.0).sin().powi(2),
            w.re.exp() * w.im.sin(),
        );
        em1 / w
    }
}

/// ζ(s,a) − 1/(s−1): the Hurwitz zeta with its pole removed.
///
/// Only certified near the pole (σ ≥ −1/2 suffices for every internal use,
/// which is confined to |s−1| < 1/4).
pub fn hurwitz_zeta_deflated(s: Complex64, a: f64) -> Result<Complex64> {
    check_finite(s)?;
    if !(a > 0.0 && a <= 1.0) || !a.is_finite() {
        return Err(EvalError::Domain(format!("shift a = {a} outside (0, 1]")));
    }
    if s.re < EM_MIN_SIGMA {
        return Err(EvalError::Accuracy(
            "deflated evaluation is only supported on the Euler–Maclaurin side".into(),
        ));
    }
    EvalDomain::default().check(s)?;
    if s.im < 0.0 {
        return Ok(hurwitz_zeta_deflated(s.conj(), a)?.conj());
    }
    Ok(hurwitz_em_inner(s, a, true))
}

/// Recognize a double as r/q with small q (continued fraction expansion).
fn rationalize(a: f64, max_den: u64) -> Option<(u64, u64)> {
    let (mut p0, mut q0, mut p1, mut q1) = (0u64, 1u64, 1u64, 0u64);
    let mut x = a;
    for _ in 0..40 {
        let fl = x.floor();
        if fl < 0.0 || fl > 1e15 {
            return None;
        }
        let ai = fl as u64;
        let p2 = ai.checked_mul(p1)?.checked_add(p0)?;
        let q2 = ai.checked_mul(q1)?.checked_add(q0)?;
        if q2 > max_den {
            return None;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let approx = p1 as f64 / q1 as f64;
        if (a - approx).abs() < 1e-12 / q1 as f64 {
            return Some((p1, q1));
        }
        let frac = x - fl;
        if frac.abs() < 1e-15 {
            return None;
        }
        x = 1.0 / frac;
    }
    None
}

/// Hurwitz zeta function ζ(s,a) for a ∈ (0,1], s ≠ 1.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    check_finite(s)?;
    if !(a > 0.0 && a <= 1.0) || !a.is_finite() {
        return Err(EvalError::Domain(format!("shift a = {a} outside (0, 1]")));
    }
    if (s - 1.0).norm() < 1e-14 {
        return Err(EvalError::Pole(Complex64::new(1.0, 0.0)));
    }
    EvalDomain::default().check(s)?;
    if s.im < 0.0 {
        // Real coefficients: ζ(s̄,a) = conj ζ(s,a), same code path mirrored.
        return Ok(hurwitz_zeta(s.conj(), a)?.conj());
    }
    if s.re >= EM_MIN_SIGMA {
        return Ok(hurwitz_em(s, a));
    }

    // Reflection: ζ(s,a) = Γπ(1−s)(e^{−πi(1−s)/2} Li_{1−s}(a-twist)
    //                               + e^{πi(1−s)/2} Li_{1−s}((1−a)-twist)).
    // With t = ℑ(s) ≥ 0 the second exponential is the large one; factor it
    // out and keep the whole prefactor in log space.
    let w = Complex64::new(1.0, 0.0) - s;
    let li_a = periodic_zeta(w, a)?;
    let li_b = if a == 1.0 {
        li_a
    } else {
        periodic_zeta(w, 1.0 - a)?
    };
    let i_pi_half_w = Complex64::new(0.0, std::f64::consts::FRAC_PI_2) * w;
    let small = (-2.0 * i_pi_half_w).exp(); // e^{−πiw}, |·| = e^{−πt} ≤ 1
    let bracket = small * li_a + li_b;
    let log_pref = log_gamma_pi(w)?.as_complex_log() + i_pi_half_w;
    Ok((log_pref + bracket.ln()).exp())
}

/// Riemann zeta function ζ(s) = ζ(s, 1).
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

/// Periodic zeta function Li_s(e^{2πia}) for a ∈ (0,1].
///
/// a = 1 reduces to ζ(s) (with its pole at s = 1); for a < 1 the function is
/// entire, and s = 1 is evaluated through Li₁ = −log(1 − e^{2πia}).
pub fn periodic_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    check_finite(s)?;
    if !(a > 0.0 && a <= 1.0) || !a.is_finite() {
        return Err(EvalError::Domain(format!("shift a = {a} outside (0, 1]")));
    }
    if a == 1.0 {
        return riemann_zeta(s);
    }
    let dom = EvalDomain::default();
    // The mirror route evaluates at 1−s; certify both orientations.
    if !dom.contains(s) && !dom.contains(Complex64::new(1.0, 0.0) - s) {
        dom.check(s)?;
    }
    if (s - 1.0).norm() <= 1e-8 {
        // Li₁(e^{2πia}) = −log(1 − e^{2πia}), removing the 0·∞ cancellation
        // of the mirror route at the Γ(1−s) pole.
        let z = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * a).exp();
        return Ok(-(Complex64::new(1.0, 0.0) - z).ln());
    }
    if s.re >= PERIODIC_DIRECT_MIN_SIGMA {
        return periodic_direct(s, a);
    }

    // Mirror relation; t ≥ 0 makes e^{πi(1−s)/2} the large factor.
    if s.im < 0.0 {
        return Ok(periodic_zeta(s.conj(), 1.0 - a)?.conj());
    }
    let w = Complex64::new(1.0, 0.0) - s;
    let za = hurwitz_zeta(w, a)?;
    let zb = hurwitz_zeta(w, 1.0 - a)?;
    let i_pi_half_w = Complex64::new(0.0, std::f64::consts::FRAC_PI_2) * w;
    // Li_s = Γπ(w)(e^{πiw/2} ζ(w,a) + e^{−πiw/2} ζ(w,1−a)), ℑw = −t ≤ 0 so
    // e^{−πiw/2} is the large one.
    let small = (2.0 * i_pi_half_w).exp(); // e^{πiw}, |·| = e^{−πt} ≤ 1
    let bracket = small * za + zb;
    let log_pref = log_gamma_pi(w)?.as_complex_log() - i_pi_half_w;
    Ok((log_pref + bracket.ln()).exp())
}

/// Direct-series branch of the periodic zeta, σ ≥ 1.25.
fn periodic_direct(s: Complex64, a: f64) -> Result<Complex64> {
    if let Some((r, q)) = rationalize(a, RATIONAL_DEN_LIMIT) {
        return periodic_rational(s, r, q);
    }
    periodic_twisted_em(s, a, 0)
}

/// Li_s(e^{2πir/q}) = q^{−s} Σ_{m=1}^{q} e^{2πimr/q} ζ(s, m/q).
///
/// Grouping the series by residue class turns the oscillatory sum into q
/// Euler–Maclaurin evaluations; away from s = 1 (guaranteed: this branch
/// runs for σ ≥ 1.25) the residue-class poles cancel benignly.
fn periodic_rational(s: Complex64, r: u64, q: u64) -> Result<Complex64> {
    let qf = q as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 1..=q {
        let turn = ((m * r) % q) as f64 / qf;
        let phase = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * turn).exp();
        acc += phase * hurwitz_em(s, m as f64 / qf);
    }
    Ok(acc * cpow_real_base(qf.ln(), -s))
}

/// Oscillatory Euler–Maclaurin for Li_s(e^{2πia}) at irrational (or large
/// denominator) shifts, σ ≥ 1.25.
///
/// The shift is first reduced to a ≤ 0.26 through conjugation and the
/// duplication formula Li_s(z) + Li_s(−z) = 2^{1−s} Li_s(z²); the tail is
/// then ∫ + ½g(N) − Σ B_{2k}/(2k)!·g^{(2k−1)}(N) with the integral expanded
/// by parts against the twist e^{2πiax}.
fn periodic_twisted_em(s: Complex64, a: f64, depth: u32) -> Result<Complex64> {
    if depth > 4 {
        return Err(EvalError::Accuracy(format!(
            "twist reduction did not terminate for a = {a}"
        )));
    }
    if a == 1.0 || a == 0.0 {
        return riemann_zeta(s);
    }
    if a > 0.5 {
        return Ok(periodic_twisted_em(s.conj(), 1.0 - a, depth)?.conj());
    }
    if a > 0.26 {
        // Li_s(e^{2πia}) = 2^{1−s} Li_s(e^{2πi·2a}) − Li_s(e^{2πi(a+1/2)})
        let two_a = if 2.0 * a >= 1.0 { 2.0 * a - 1.0 } else { 2.0 * a };
        let two_a = if two_a == 0.0 { 1.0 } else { two_a };
        let shifted = a + 0.5;
        let doubled = periodic_twisted_em(s, two_a, depth + 1)?;
        let off = periodic_twisted_em(s, shifted, depth + 1)?;
        let two_pow = cpow_real_base(std::f64::consts::LN_2, Complex64::new(1.0, 0.0) - s);
        return Ok(two_pow * doubled - off);
    }

    let omega = 2.0 * std::f64::consts::PI * a;
    let j_max = 48usize;
    let n = ((s.norm() + j_max as f64) / (omega * 0.55)).ceil().max(48.0);
    if n > 5e6 {
        return Err(EvalError::Accuracy(format!(
            "twisted series needs {n:.0} terms for a = {a}, |s| = {:.1}",
            s.norm()
        )));
    }
    let n = n as usize;

    // main sum Σ_{n=1}^{N−1} e^{iωn} n^{−s}
    let mut main = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let ln = (k as f64).ln();
        let e = (-s.re * ln).exp();
        let (sin, cos) = (omega * k as f64 - s.im * ln).sin_cos();
        main += Complex64::new(e * cos, e * sin);
    }

    let nf = n as f64;
    let ln_n = nf.ln();
    let phase_n = {
        let (sin, cos) = (omega * nf).sin_cos();
        Complex64::new(cos, sin)
    };
    let n_pow_minus_s = cpow_real_base(ln_n, -s);
    let i_omega = Complex64::new(0.0, omega);

    // ∫_N^∞ e^{iωx}x^{−s}dx = −e^{iωN}/(iω)·Σ_j (s)_j/(iω)^j·N^{−s−j}
    let mut integral_series = Complex64::new(0.0, 0.0);
    let mut term = n_pow_minus_s;
    let mut poch = Complex64::new(1.0, 0.0);
    let mut best = f64::INFINITY;
    for j in 0..j_max {
        let contrib = poch * term;
        if contrib.norm() > best {
            break; // asymptotic series turned; stop at the smallest term
        }
        best = contrib.norm();
        integral_series += contrib;
        poch /= i_omega;
        poch *= s + j as f64;
        term /= nf;
    }
    let integral = -phase_n / i_omega * integral_series;

    // g(N)/2 − Σ_k B_{2k}/(2k)!·g^{(2k−1)}(N),
    // g^{(m)}(N) = e^{iωN} Σ_i C(m,i)(iω)^{m−i}(−1)^i(s)_i N^{−s−i}
    let mut poch_i = vec![Complex64::new(1.0, 0.0); 2 * EM_TERMS];
    for i in 1..2 * EM_TERMS {
        poch_i[i] = poch_i[i - 1] * (s + (i as f64 - 1.0));
    }
    let mut n_pow_i = vec![n_pow_minus_s; 2 * EM_TERMS];
    for i in 1..2 * EM_TERMS {
        n_pow_i[i] = n_pow_i[i - 1] / nf;
    }
    let mut corrections = n_pow_minus_s * 0.5;
    let mut fact = 2.0;
    for k in 1..=EM_TERMS {
        let m = 2 * k - 1;
        let mut deriv = Complex64::new(0.0, 0.0);
        let mut binom = 1.0f64;
        for i in 0..=m {
            let iw_pow = {
                let p = (m - i) as f64;
                // (iω)^{m−i}
                let mag = omega.powf(p);
                let (sin, cos) = (std::f64::consts::FRAC_PI_2 * p).sin_cos();
                Complex64::new(mag * cos, mag * sin)
            };
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            deriv += binom * sign * iw_pow * poch_i[i] * n_pow_i[i];
            binom *= (m - i) as f64 / (i + 1) as f64;
        }
        corrections -= BERNOULLI_2K[k - 1] / fact * deriv;
        let mf = (2 * k) as f64;
        fact *= (mf + 1.0) * (mf + 2.0);
    }

    Ok(main + integral + phase_n * corrections)
}

/// Dirichlet L-function L(s,χ) = q^{−s} Σ_{r=1}^{q} χ(r) ζ(s, r/q).
pub fn dirichlet_l(s: Complex64, chi: &DirichletCharacter) -> Result<Complex64> {
    Ok(dirichlet_l_many(s, std::slice::from_ref(&chi))?[0])
}

/// Evaluates several characters of the same modulus at once, sharing the
/// Hurwitz evaluations ζ(s, r/q) between them. The zero-counting paths
/// evaluate L(s,χ) and L(s,χ̄) together and this halves their cost.
pub fn dirichlet_l_many(s: Complex64, chis: &[&DirichletCharacter]) -> Result<Vec<Complex64>> {
    if chis.is_empty() {
        return Ok(Vec::new());
    }
    let q = chis[0].modulus();
    for chi in chis {
        if chi.modulus() != q {
            return Err(EvalError::Domain(
                "dirichlet_l_many requires a common modulus".into(),
            ));
        }
    }
    if (s - 1.0).norm() < 1e-14 && chis.iter().any(|c| c.is_principal()) {
        return Err(EvalError::Pole(Complex64::new(1.0, 0.0)));
    }
    if q == 1 {
        let z = riemann_zeta(s)?;
        return Ok(vec![z; chis.len()]);
    }
    let qf = q as f64;
    // Near s = 1 the residue-class poles cancel for non-principal χ
    // (Σ_r χ(r) = 0); assembling from deflated terms makes that cancellation
    // exact. Principal characters keep their genuine pole.
    let deflate = (s - 1.0).norm() < 0.125 && chis.iter().all(|c| !c.is_principal());
    let mut hur = Vec::with_capacity(q as usize);
    for r in 1..=q {
        if num_integer::gcd(r, q) == 1 {
            let a = r as f64 / qf;
            let z = if deflate {
                hurwitz_zeta_deflated(s, a)?
            } else {
                hurwitz_zeta(s, a)?
            };
            hur.push((r, z));
        }
    }
    let q_pow = cpow_real_base(qf.ln(), -s);
    let mut out = Vec::with_capacity(chis.len());
    for chi in chis {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(r, z) in &hur {
            acc += chi.value(r) * z;
        }
        out.push(q_pow * acc);
    }
    Ok(out)
}
