//! Argument-principle zero counting and location in rectangles.
//!
//! The counter walks the rectangle boundary, tracking the phase of F along
//! adaptively refined segments: a step is accepted only when the phase
//! change satisfies |Δarg| < π/2, which certifies the winding number once
//! the walk closes. No derivative of F is ever required. Poles of the
//! handle inside the rectangle are added back, so the reported count is the
//! number of zeros.
//!
//! Location proceeds by recursive bisection (tall rectangles are sliced
//! into bands first) until every cell holds at most one zero, followed by
//! damped Newton refinement with a central-difference derivative.
//! Multiplicities come from the winding of a small circle around each
//! refined zero.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{lambda_chi, DirichletCharacter};
use crate::composed::FunctionHandle;
use crate::error::{EvalError, Result};
use crate::zeta::EvalDomain;

/// Search region σ₁ < ℜ(s) < σ₂, t₁ < ℑ(s) < t₂.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rectangle {
    pub sigma1: f64,
    pub sigma2: f64,
    pub t1: f64,
    pub t2: f64,
}

impl Rectangle {
    pub fn new(sigma1: f64, sigma2: f64, t1: f64, t2: f64) -> Result<Self> {
        if !(sigma1 < sigma2 && t1 < t2) {
            return Err(EvalError::Domain(format!(
                "degenerate rectangle ({sigma1},{sigma2})×({t1},{t2})"
            )));
        }
        let dom = EvalDomain::default();
        if sigma1 < dom.sigma_min
            || sigma2 > dom.sigma_max
            || t1 < -dom.t_max
            || t2 > dom.t_max
        {
            return Err(EvalError::Accuracy(format!(
                "rectangle ({sigma1},{sigma2})×({t1},{t2}) leaves the certified window"
            )));
        }
        Ok(Rectangle { sigma1, sigma2, t1, t2 })
    }

    pub fn width(&self) -> f64 {
        self.sigma2 - self.sigma1
    }

    pub fn height(&self) -> f64 {
        self.t2 - self.t1
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new(
            0.5 * (self.sigma1 + self.sigma2),
            0.5 * (self.t1 + self.t2),
        )
    }

    pub fn contains(&self, s: Complex64) -> bool {
        self.sigma1 < s.re && s.re < self.sigma2 && self.t1 < s.im && s.im < self.t2
    }

    fn grow(&self, pad: f64) -> Rectangle {
        Rectangle {
            sigma1: self.sigma1 - pad,
            sigma2: self.sigma2 + pad,
            t1: self.t1 - pad,
            t2: self.t2 + pad,
        }
    }

    /// Distance from s to the boundary polyline.
    fn boundary_distance(&self, s: Complex64) -> f64 {
        let dx = (self.sigma1 - s.re).max(s.re - self.sigma2);
        let dy = (self.t1 - s.im).max(s.im - self.t2);
        if dx <= 0.0 && dy <= 0.0 {
            (-dx).min(-dy)
        } else {
            (dx.max(0.0).powi(2) + dy.max(0.0).powi(2)).sqrt()
        }
    }
}

/// Zero count of a rectangle together with the diagnostics that certify it.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CountResult {
    pub count: u32,
    /// Pre-rounding zero count: winding/2π plus enclosed poles.
    pub winding_integral: f64,
    /// min |F| over every contour sample.
    pub boundary_margin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroMethod {
    Winding,
    Refinement,
}

/// A located zero.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZeroRecord {
    pub location: Complex64,
    pub residual: f64,
    pub multiplicity: u32,
    pub method: ZeroMethod,
    pub rect: Rectangle,
}

/// Batched evaluation of contour samples.
fn eval_batch(handle: &FunctionHandle, pts: &[Complex64]) -> Result<Vec<Complex64>> {
    pts.par_iter().map(|&s| handle.eval(s)).collect()
}

const MARGIN_FLOOR: f64 = 1e-9;
const PERTURB: f64 = 1e-4;

struct ContourWalk {
    winding: f64,
    margin: f64,
}

/// Walks the closed rectangle contour; errors with `BoundaryZero{attempts: 0}`
/// as an internal signal when the phase cannot be resolved or the margin
/// collapses.
fn contour_walk(handle: &FunctionHandle, rect: &Rectangle, step: f64) -> Result<ContourWalk> {
    let corners = [
        Complex64::new(rect.sigma1, rect.t1),
        Complex64::new(rect.sigma2, rect.t1),
        Complex64::new(rect.sigma2, rect.t2),
        Complex64::new(rect.sigma1, rect.t2),
    ];
    let mut pts = Vec::new();
    for k in 0..4 {
        let a = corners[k];
        let b = corners[(k + 1) % 4];
        let n = ((b - a).norm() / step).ceil().max(1.0) as usize;
        for j in 0..n {
            pts.push(a + (b - a) * (j as f64 / n as f64));
        }
    }
    pts.push(corners[0]);
    let vals = eval_batch(handle, &pts)?;
    let mut margin = f64::INFINITY;
    for v in &vals {
        margin = margin.min(v.norm());
    }
    if margin < MARGIN_FLOOR {
        return Err(EvalError::BoundaryZero {
            attempts: 0,
            min_abs: margin,
        });
    }
    let mut winding = 0.0;
    for k in 0..pts.len() - 1 {
        winding += segment_phase(
            handle,
            pts[k],
            vals[k],
            pts[k + 1],
            vals[k + 1],
            &mut margin,
            0,
        )?;
    }
    Ok(ContourWalk {
        winding: winding / (2.0 * std::f64::consts::PI),
        margin,
    })
}

fn segment_phase(
    handle: &FunctionHandle,
    a: Complex64,
    fa: Complex64,
    b: Complex64,
    fb: Complex64,
    margin: &mut f64,
    depth: u32,
) -> Result<f64> {
    let dphi = (fb * fa.conj()).arg();
    if dphi.abs() < std::f64::consts::FRAC_PI_2 {
        return Ok(dphi);
    }
    if depth > 48 || (b - a).norm() < 1e-11 * (1.0 + a.norm()) {
        // the phase refuses to settle: a zero is effectively on the contour
        return Err(EvalError::BoundaryZero {
            attempts: 0,
            min_abs: *margin,
        });
    }
    let m = (a + b) / 2.0;
    let fm = handle.eval(m)?;
    *margin = margin.min(fm.norm());
    if *margin < MARGIN_FLOOR {
        return Err(EvalError::BoundaryZero {
            attempts: 0,
            min_abs: *margin,
        });
    }
    Ok(segment_phase(handle, a, fa, m, fm, margin, depth + 1)?
        + segment_phase(handle, m, fm, b, fb, margin, depth + 1)?)
}

fn initial_step(handle: &FunctionHandle) -> f64 {
    let q = handle.oscillation_modulus() as f64;
    (2.0 * std::f64::consts::PI / (10.0 * (q + 2.0).ln())).min(0.05)
}

/// Number of zeros of the handle inside the rectangle, by the argument
/// principle with adaptive phase tracking.
pub fn count_zeros(handle: &FunctionHandle, rect: &Rectangle) -> Result<CountResult> {
    if handle.is_identically_zero() {
        return Err(EvalError::Domain(format!(
            "{handle} is identically zero; counting is meaningless"
        )));
    }
    let step = initial_step(handle);
    let mut r = *rect;
    let mut last_margin = f64::NAN;
    for attempt in 0..=3u32 {
        // poles on (or hugging) the boundary are fatal; enclosed poles are
        // counted and added back to the winding
        let probe = r.grow(1.0);
        let poles = handle.poles_in(probe.sigma1, probe.sigma2, probe.t1, probe.t2);
        let mut inside = 0u32;
        for p in &poles {
            if r.boundary_distance(*p) < 1e-6 {
                return Err(EvalError::PoleOnBoundary(*p));
            }
            if r.contains(*p) {
                inside += 1;
            }
        }
        match contour_walk(handle, &r, step) {
            Ok(walk) => {
                let zeros = walk.winding + inside as f64;
                let rounded = zeros.round();
                if (zeros - rounded).abs() > 0.1 || rounded < -0.5 {
                    return Err(EvalError::Convergence(format!(
                        "winding {zeros} too far from an integer on {r:?}"
                    )));
                }
                return Ok(CountResult {
                    count: rounded as u32,
                    winding_integral: zeros,
                    boundary_margin: walk.margin,
                });
            }
            Err(EvalError::BoundaryZero { min_abs, .. }) => {
                last_margin = min_abs;
                if attempt == 3 {
                    break;
                }
                r = r.grow(PERTURB);
            }
            Err(e) => return Err(e),
        }
    }
    Err(EvalError::BoundaryZero {
        attempts: 3,
        min_abs: last_margin,
    })
}

/// Damped Newton iteration with central-difference derivative
/// (step 1e−6·max(1,|s|)). Iterates are confined to a trust ball around the
/// start; leaving it means the start was in the basin of a different zero,
/// which the caller resolves by further bisection.
fn newton_refine(
    handle: &FunctionHandle,
    start: Complex64,
    max_move: f64,
) -> Result<(Complex64, f64, u32)> {
    let mut s = start;
    let mut fs = handle.eval(s)?;
    let mut iters = 0;
    for _ in 0..60 {
        iters += 1;
        if fs.norm() < 1e-13 {
            break;
        }
        let h = 1e-6 * s.norm().max(1.0);
        let fp = handle.eval(s + h)?;
        let fm = handle.eval(s - h)?;
        let deriv = (fp - fm) / (2.0 * h);
        if deriv.norm() == 0.0 {
            return Err(EvalError::Convergence(format!(
                "vanishing derivative estimate at {s}"
            )));
        }
        let full = fs / deriv;
        let mut lambda = 1.0f64;
        // keep the iterate inside the trust ball
        let mut s_next = s - full;
        while (s_next - start).norm() > max_move && lambda > 1e-4 {
            lambda *= 0.5;
            s_next = s - lambda * full;
        }
        if (s_next - start).norm() > max_move {
            break; // wrong basin; report the non-converged state
        }
        let mut f_next = handle.eval(s_next)?;
        for _ in 0..12 {
            if f_next.norm() <= fs.norm() || lambda < 1e-3 {
                break;
            }
            lambda *= 0.5;
            s_next = s - lambda * full;
            f_next = handle.eval(s_next)?;
        }
        let moved = (s_next - s).norm();
        s = s_next;
        fs = f_next;
        if moved < 1e-14 * (1.0 + s.norm()) {
            break;
        }
    }
    Ok((s, fs.norm(), iters))
}

/// Winding of a small circle, for the multiplicity of a refined zero.
fn circle_multiplicity(handle: &FunctionHandle, center: Complex64, radius: f64) -> Result<u32> {
    let mut r = radius;
    'radii: for _ in 0..3 {
        let n = 48;
        let mut pts = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            pts.push(center + r * Complex64::new(ang.cos(), ang.sin()));
        }
        let vals = eval_batch(handle, &pts)?;
        if vals.iter().any(|v| v.norm() < 1e-12) {
            r *= 1.7;
            continue 'radii;
        }
        let mut winding = 0.0;
        let mut margin = f64::INFINITY;
        for k in 0..n {
            match segment_phase(handle, pts[k], vals[k], pts[k + 1], vals[k + 1], &mut margin, 0)
            {
                Ok(d) => winding += d,
                Err(_) => {
                    r *= 1.7;
                    continue 'radii;
                }
            }
        }
        let m = winding / (2.0 * std::f64::consts::PI);
        if (m - m.round()).abs() < 0.1 && m.round() >= 1.0 {
            return Ok(m.round() as u32);
        }
        r *= 1.7;
    }
    Ok(1)
}

/// Outcome of a location run: the records plus non-fatal per-cell failures.
#[derive(Debug, Clone, Serialize)]
pub struct LocateOutcome {
    pub records: Vec<ZeroRecord>,
    pub failures: Vec<String>,
}

/// Locates every zero inside the rectangle (at most `max_zeros`).
///
/// Tall rectangles are sliced into bands, each band is bisected until its
/// cells hold single zeros, and each cell is refined by Newton iteration
/// with residual target 1e−9.
pub fn locate_zeros(
    handle: &FunctionHandle,
    rect: &Rectangle,
    max_zeros: usize,
) -> Result<LocateOutcome> {
    let total = count_zeros(handle, rect)?;
    let mut outcome = LocateOutcome {
        records: Vec::new(),
        failures: Vec::new(),
    };
    if total.count == 0 {
        return Ok(outcome);
    }
    if total.count as usize > max_zeros {
        return Err(EvalError::Domain(format!(
            "rectangle holds {} zeros, beyond the requested cap {max_zeros}",
            total.count
        )));
    }

    // band slicing along t keeps the bisection depth flat for tall regions
    let mut stack: Vec<(Rectangle, u32)> = Vec::new();
    if rect.height() > 2.5 {
        let bands = (rect.height() / 2.0).ceil() as usize;
        let dt = rect.height() / bands as f64;
        let mut from = rect.t1;
        for _ in 0..bands {
            let to = (from + dt).min(rect.t2);
            let band = Rectangle { t1: from, t2: to, ..*rect };
            match count_zeros(handle, &band) {
                Ok(c) => {
                    if c.count > 0 {
                        stack.push((band, c.count));
                    }
                }
                Err(e) => outcome
                    .failures
                    .push(format!("band {band:?} count failed: {e}")),
            }
            from = to;
        }
    } else {
        stack.push((*rect, total.count));
    }

    while let Some((cell, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        let small = cell.width().min(cell.height()) < 5e-4;
        if count == 1 || small {
            match refine_cell(handle, &cell, rect) {
                RefineOutcome::Record(z) => outcome.records.push(z),
                RefineOutcome::Escaped(loc) if !small => {
                    // Newton slid to a stronger zero outside this cell; keep
                    // shrinking until the cell center is in the right basin.
                    match split_cell(handle, &cell, count) {
                        Ok((left, cl, right, cr)) => {
                            stack.push((left, cl));
                            stack.push((right, cr));
                        }
                        Err(e) => outcome.failures.push(format!(
                            "cell {cell:?}: refinement escaped to {loc} and split failed: {e}"
                        )),
                    }
                }
                RefineOutcome::Escaped(loc) => outcome.failures.push(format!(
                    "cell {cell:?}: refinement escaped to {loc}"
                )),
            }
            continue;
        }
        match split_cell(handle, &cell, count) {
            Ok((left, cl, right, cr)) => {
                stack.push((left, cl));
                stack.push((right, cr));
            }
            Err(e) => outcome
                .failures
                .push(format!("cell {cell:?} split failed: {e}")),
        }
    }

    // dedupe boundary-straddling finds, sort by (t, σ)
    outcome.records.sort_by(|x, y| {
        (x.location.im, x.location.re)
            .partial_cmp(&(y.location.im, y.location.re))
            .unwrap()
    });
    outcome
        .records
        .dedup_by(|a, b| (a.location - b.location).norm() < 1e-6);

    let found: u32 = outcome.records.iter().map(|r| r.multiplicity).sum();
    if found != total.count {
        outcome.failures.push(format!(
            "located multiplicity sum {found} differs from count {}",
            total.count
        ));
    }
    Ok(outcome)
}

enum RefineOutcome {
    Record(ZeroRecord),
    Escaped(Complex64),
}

fn refine_cell(handle: &FunctionHandle, cell: &Rectangle, outer: &Rectangle) -> RefineOutcome {
    let trust = (cell.width().powi(2) + cell.height().powi(2)).sqrt() + 0.05;
    match newton_refine(handle, cell.center(), trust) {
        Ok((loc, residual, _)) if residual < 1e-9 => {
            // the zero must belong to this cell (up to the perturbation pad)
            // and to the search rectangle
            if !cell.grow(5e-4).contains(loc) || !outer.grow(1e-6).contains(loc) {
                return RefineOutcome::Escaped(loc);
            }
            let multiplicity = circle_multiplicity(handle, loc, 1e-3).unwrap_or(1);
            RefineOutcome::Record(ZeroRecord {
                location: loc,
                residual,
                multiplicity,
                method: ZeroMethod::Refinement,
                rect: *cell,
            })
        }
        // a non-converged center start lands in the wrong basin more often
        // than not; shrinking the cell fixes both outcomes
        Ok((loc, _, _)) => RefineOutcome::Escaped(loc),
        Err(_) => RefineOutcome::Escaped(cell.center()),
    }
}

fn split_cell(
    handle: &FunctionHandle,
    cell: &Rectangle,
    count: u32,
) -> Result<(Rectangle, u32, Rectangle, u32)> {
    let vertical = cell.height() >= cell.width();
    for ratio in [0.5, 0.46, 0.57, 0.41, 0.62] {
        let (left, right) = if vertical {
            let mid = cell.t1 + ratio * cell.height();
            (
                Rectangle { t2: mid, ..*cell },
                Rectangle { t1: mid, ..*cell },
            )
        } else {
            let mid = cell.sigma1 + ratio * cell.width();
            (
                Rectangle { sigma2: mid, ..*cell },
                Rectangle { sigma1: mid, ..*cell },
            )
        };
        let cl = match count_zeros(handle, &left) {
            Ok(c) => c.count,
            Err(_) => continue,
        };
        let cr = match count_zeros(handle, &right) {
            Ok(c) => c.count,
            Err(_) => continue,
        };
        if cl + cr == count {
            return Ok((left, cl, right, cr));
        }
    }
    Err(EvalError::Convergence(format!(
        "no splitting line preserved the count of {cell:?}"
    )))
}

/// Refines a single zero from a starting guess; the record's rectangle is a
/// small box around the converged location.
pub fn refine_zero(handle: &FunctionHandle, start: Complex64) -> Result<ZeroRecord> {
    let (loc, residual, _) = newton_refine(handle, start, 0.5)?;
    if residual >= 1e-9 {
        return Err(EvalError::Convergence(format!(
            "residual {residual:.3e} after refinement from {start}"
        )));
    }
    let multiplicity = circle_multiplicity(handle, loc, 1e-3)?;
    let pad = 1e-3;
    Ok(ZeroRecord {
        location: loc,
        residual,
        multiplicity,
        method: ZeroMethod::Refinement,
        rect: Rectangle {
            sigma1: loc.re - pad,
            sigma2: loc.re + pad,
            t1: loc.im - pad,
            t2: loc.im + pad,
        },
    })
}

/// Closed-form zeros of the critical-line factor q^s + i^{−κ(χ)}G(χ):
/// σ = 1/2 exactly, t = (arg(−i^{−κ}G(χ)/√q) + 2πk)/ln q, 0 < t ≤ t_max.
pub fn factor_line_zeros(chi: &DirichletCharacter, t_max: f64) -> Result<Vec<Complex64>> {
    let lambda = lambda_chi(chi)?; // primitivity enforced here
    let ln_q = (chi.modulus() as f64).ln();
    // q^{it} = −λ(χ); |λ| = 1 pins σ = 1/2
    let mut theta = (-lambda).arg();
    if theta <= 0.0 {
        theta += 2.0 * std::f64::consts::PI;
    }
    let mut out = Vec::new();
    let mut k = 0u64;
    loop {
        let t = (theta + 2.0 * std::f64::consts::PI * k as f64) / ln_q;
        if t > t_max {
            break;
        }
        out.push(Complex64::new(0.5, t));
        k += 1;
    }
    Ok(out)
}

/// Report of a real-axis scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub step: f64,
    /// Smallest |F| over the grid.
    pub min_abs: f64,
    pub argmin: f64,
    /// Flagging threshold for certified non-vanishing.
    pub threshold: f64,
    /// True when no real zero was found and the grid minimum clears the
    /// threshold.
    pub certified_nonvanishing: bool,
    pub zeros: Vec<ZeroRecord>,
}

/// Scans |F(σ)| on a real grid, refining every interior local minimum; a
/// refined point with |F| < 1e−9 and |ℑρ| < 1e−8 inside the segment is a
/// certified real zero.
pub fn scan_real_axis(
    handle: &FunctionHandle,
    sigma_lo: f64,
    sigma_hi: f64,
    step: f64,
) -> Result<ScanReport> {
    if !(sigma_lo < sigma_hi) || !(step > 0.0) {
        return Err(EvalError::Domain("bad scan interval".into()));
    }
    let n = ((sigma_hi - sigma_lo) / step).ceil() as usize + 1;
    let pts: Vec<Complex64> = (0..n)
        .map(|k| Complex64::new((sigma_lo + k as f64 * step).min(sigma_hi), 0.0))
        .collect();
    let vals: Vec<f64> = eval_batch(handle, &pts)?
        .into_iter()
        .map(|v| v.norm())
        .collect();
    let mut min_abs = f64::INFINITY;
    let mut argmin = sigma_lo;
    for (p, v) in pts.iter().zip(&vals) {
        if *v < min_abs {
            min_abs = *v;
            argmin = p.re;
        }
    }
    let mut zeros: Vec<ZeroRecord> = Vec::new();
    for k in 1..n.saturating_sub(1) {
        if vals[k] <= vals[k - 1] && vals[k] <= vals[k + 1] {
            if let Ok((loc, residual, _)) = newton_refine(handle, pts[k], sigma_hi - sigma_lo + 1.0) {
                if residual < 1e-9
                    && loc.im.abs() < 1e-8
                    && loc.re > sigma_lo - step
                    && loc.re < sigma_hi + step
                    && !zeros.iter().any(|z| (z.location - loc).norm() < 1e-6)
                {
                    let multiplicity = circle_multiplicity(handle, loc, 1e-3)?;
                    zeros.push(ZeroRecord {
                        location: loc,
                        residual,
                        multiplicity,
                        method: ZeroMethod::Refinement,
                        rect: Rectangle {
                            sigma1: sigma_lo,
                            sigma2: sigma_hi,
                            t1: -step,
                            t2: step,
                        },
                    });
                }
            }
        }
    }
    let threshold = 1e-6;
    let certified = zeros.is_empty() && min_abs > threshold;
    Ok(ScanReport {
        sigma_lo,
        sigma_hi,
        step,
        min_abs,
        argmin,
        threshold,
        certified_nonvanishing: certified,
        zeros,
    })
}

/// One row of a zero-density table.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DensityRow {
    pub t: f64,
    pub count: u32,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityTable {
    pub sigma1: f64,
    pub sigma2: f64,
    pub rows: Vec<DensityRow>,
    pub zeros: Vec<ZeroRecord>,
    pub failures: Vec<String>,
}

/// Counts N(σ₁,σ₂,T) = #zeros in σ₁ < σ < σ₂, |t| ≤ T for each requested T;
/// with `locate` the zeros backing the final count are located band by band.
pub fn density_experiment(
    handle: &FunctionHandle,
    sigma1: f64,
    sigma2: f64,
    t_values: &[f64],
    locate: bool,
) -> Result<DensityTable> {
    if !(0.5 < sigma1 && sigma1 < sigma2) {
        return Err(EvalError::Domain(
            "density experiment requires 1/2 < σ₁ < σ₂".into(),
        ));
    }
    if t_values.is_empty() || t_values.windows(2).any(|w| w[0] >= w[1]) || t_values[0] <= 0.0 {
        return Err(EvalError::Domain(
            "t values must be positive and strictly increasing".into(),
        ));
    }
    let mut rows = Vec::with_capacity(t_values.len());
    for &t in t_values {
        let rect = Rectangle::new(sigma1, sigma2, -t, t)?;
        let c = count_zeros(handle, &rect)?;
        rows.push(DensityRow {
            t,
            count: c.count,
            ratio: c.count as f64 / t,
        });
    }
    let mut zeros = Vec::new();
    let mut failures = Vec::new();
    if locate {
        let t_final = *t_values.last().unwrap();
        let rect = Rectangle::new(sigma1, sigma2, -t_final, t_final)?;
        match locate_zeros(handle, &rect, 100_000) {
            Ok(outcome) => {
                zeros = outcome.records;
                failures = outcome.failures;
            }
            Err(e) => failures.push(format!("locating up to T={t_final} failed: {e}")),
        }
    }
    Ok(DensityTable {
        sigma1,
        sigma2,
        rows,
        zeros,
        failures,
    })
}
