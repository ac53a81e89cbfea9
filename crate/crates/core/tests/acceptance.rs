//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance is pinned here, in code; nothing is deferred to later
//! calibration.

use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zetalab_core::characters::{
    enumerate_characters, gauss_sum, kronecker_character, DirichletCharacter,
};
use zetalab_core::composed::{
    fe_residual, selberg_descriptor, verify_linear_relations, FunctionHandle, Rational,
};
use zetalab_core::gamma::{gamma_cos, gamma_sin};
use zetalab_core::zeros::{
    count_zeros, density_experiment, factor_line_zeros, locate_zeros, refine_zero,
    scan_real_axis, Rectangle,
};
use zetalab_core::zeta::dirichlet_l_many;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn report(n: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {n:02} {}: {name} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} ({name}) failed: {detail}");
}

fn primitive_characters(q_max: u64) -> Vec<DirichletCharacter> {
    let mut out = Vec::new();
    for q in 3..=q_max {
        for chi in enumerate_characters(q).unwrap() {
            if chi.is_primitive() {
                out.push(chi);
            }
        }
    }
    out
}

/// Seeded admissible sample points for residual suites: off the poles of the
/// handle (on both sides of s ↔ 1−s) and off the real-axis integer lattice
/// where the gamma factors degenerate.
fn sample_points(
    handle: &FunctionHandle,
    n: usize,
    seed: u64,
    sigma: (f64, f64),
    t_max: f64,
) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    let mut guard = 0;
    while out.len() < n {
        guard += 1;
        assert!(guard < 100_000, "sampler starved");
        let s = c(rng.gen_range(sigma.0..sigma.1), rng.gen_range(-t_max..t_max));
        let ok = [s, c(1.0, 0.0) - s].iter().all(|p| {
            handle.pole_distance(*p) > 0.05
                && !(p.im.abs() < 0.05 && (p.re - p.re.round()).abs() < 0.05)
        });
        if ok {
            out.push(s);
        }
    }
    out
}

fn seeded_dedekind_handles(count: usize, seed: u64) -> Vec<FunctionHandle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chi_even = enumerate_characters(5)
        .unwrap()
        .into_iter()
        .find(|ch| ch.is_primitive() && ch.is_real() && ch.kappa() == 0)
        .unwrap();
    let chi_odd = enumerate_characters(3)
        .unwrap()
        .into_iter()
        .find(|ch| ch.is_primitive())
        .unwrap();
    let dens = [3u64, 4, 5, 7, 8];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let l: [u32; 6] = std::array::from_fn(|_| rng.gen_range(0..=2));
        if (2 * l[0] + l[2] + l[4]).min(2 * l[1] + l[3] + l[5]) < 1 {
            continue;
        }
        let mut slots = Vec::with_capacity(6);
        for i in 0..6 {
            let strict = i >= 3;
            loop {
                let den = dens[rng.gen_range(0..dens.len())];
                if strict && den < 3 {
                    continue;
                }
                let num = rng.gen_range(1..=den / 2);
                if num == 0 || num_integer::gcd(num, den) != 1 {
                    continue;
                }
                if strict && 2 * num == den {
                    continue;
                }
                slots.push(Rational::new(num, den).unwrap());
                break;
            }
        }
        let a: [Rational; 6] = slots.try_into().unwrap();
        if let Ok(h) =
            FunctionHandle::dedekind_composite(l, a, chi_even.clone(), chi_odd.clone(), None)
        {
            out.push(h);
        }
    }
    out
}

#[test]
fn criterion_01_functional_equation_suite() {
    let started = Instant::now();
    let mut handles: Vec<FunctionHandle> = vec![FunctionHandle::zeta(), FunctionHandle::dh()];
    for chi in primitive_characters(13) {
        handles.push(FunctionHandle::raw_l(chi.clone()));
        handles.push(FunctionHandle::f_chi(chi.clone()).unwrap());
        handles.push(FunctionHandle::g_chi(chi).unwrap());
    }
    for chi in enumerate_characters(5).unwrap() {
        if !chi.is_real() {
            handles.push(FunctionHandle::v_plus(chi.clone()).unwrap());
            handles.push(FunctionHandle::v_minus(chi).unwrap());
        }
    }
    for q in 2..=12u64 {
        for r in 1..=q / 2 {
            if num_integer::gcd(r, q) != 1 {
                continue;
            }
            let a = Rational::new(r, q).unwrap();
            handles.push(FunctionHandle::z(a).unwrap());
            handles.push(FunctionHandle::p(a).unwrap());
            handles.push(FunctionHandle::q_fun(a).unwrap());
            if 2 * r < q {
                handles.push(FunctionHandle::y(a).unwrap());
                handles.push(FunctionHandle::o(a).unwrap());
                handles.push(FunctionHandle::x(a).unwrap());
            }
        }
    }
    handles.extend(seeded_dedekind_handles(5, 0xDEDE));

    let mut worst = 0.0f64;
    let mut worst_handle = String::new();
    for (idx, h) in handles.iter().enumerate() {
        let pts = sample_points(h, 100, 1000 + idx as u64, (-3.0, 4.0), 50.0);
        for s in pts {
            let r = fe_residual(h, s).unwrap_or(f64::INFINITY);
            if r > worst {
                worst = r;
                worst_handle = format!("{h} at {s}");
            }
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let pass = worst < 1e-8 && elapsed < 120.0;
    report(
        1,
        "functional-equation suite",
        pass,
        &format!(
            "max residual {worst:.3e} over {} handles × 100 points (tol 1e-8), runtime {elapsed:.1}s (cap 120s); worst: {worst_handle}",
            handles.len()
        ),
    );
}

#[test]
fn criterion_02_gauss_sum_modulus() {
    let mut worst = 0.0f64;
    let mut checked = 0;
    for q in 1..=50u64 {
        for chi in enumerate_characters(q).unwrap() {
            if chi.is_primitive() {
                checked += 1;
                let g = gauss_sum(&chi).value;
                worst = worst.max((g.norm_sqr() - q as f64).abs());
            }
        }
    }
    let pass = worst < 1e-10;
    report(
        2,
        "Gauss-sum modulus |G(χ)|² = q, q ≤ 50",
        pass,
        &format!("max deviation {worst:.3e} over {checked} primitive characters (tol 1e-10)"),
    );
}

#[test]
fn criterion_03_linear_relations() {
    let mut worst = 0.0f64;
    let mut worst_at = String::new();
    for &q in &[3u64, 4, 5, 7, 8, 12] {
        for &s in &[c(2.0, 3.0), c(0.6, 5.0)] {
            let rep = verify_linear_relations(q, s).unwrap();
            for row in &rep.rows {
                if row.max_mismatch > worst {
                    worst = row.max_mismatch;
                    worst_at = format!("{} at q={q}, s={s}", row.name);
                }
            }
        }
    }
    let pass = worst < 1e-10;
    report(
        3,
        "eight linear-relation families",
        pass,
        &format!("max mismatch {worst:.3e} (tol 1e-10); worst: {worst_at}"),
    );
}

#[test]
fn criterion_04_reflection_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut worst = 0.0f64;
    let mut produced = 0;
    while produced < 1000 {
        let s = c(rng.gen_range(-4.0..5.0), rng.gen_range(-60.0..60.0));
        // stay off the real-axis integer lattice (poles and trig zeros)
        if s.im.abs() < 0.05 && (s.re - s.re.round()).abs() < 0.05 {
            continue;
        }
        produced += 1;
        let one = c(1.0, 0.0);
        let pc = gamma_cos(s).unwrap() * gamma_cos(one - s).unwrap();
        let ps = gamma_sin(s).unwrap() * gamma_sin(one - s).unwrap();
        worst = worst.max((pc - 1.0).norm()).max((ps - 1.0).norm());
    }
    let pass = worst < 1e-9;
    report(
        4,
        "Γcos/Γsin reflection closure at 1000 seeded points",
        pass,
        &format!("max |product − 1| = {worst:.3e} (tol 1e-9)"),
    );
}

#[test]
fn criterion_05_half_point_values() {
    let s = c(0.5, 0.0);
    let mut worst = 0.0f64;
    let mut checked = 0;
    for chi in primitive_characters(13) {
        checked += 1;
        let q = chi.modulus() as f64;
        let f = FunctionHandle::f_chi(chi.clone()).unwrap().eval(s).unwrap();
        let chi_bar = chi.conjugate();
        let pair = dirichlet_l_many(s, &[&chi, &chi_bar]).unwrap();
        let dev = if chi.kappa() == 0 {
            (f - 2.0 * q.sqrt() * pair[0]).norm()
        } else {
            // odd analog through the Gauss-sum side
            let g = gauss_sum(&chi).value;
            (f - 2.0 * c(0.0, -1.0) * g * pair[1]).norm()
        };
        worst = worst.max(dev / f.norm().max(1.0));
    }
    let pass = worst < 1e-9;
    report(
        5,
        "f(1/2,χ) = 2√q·L(1/2,χ) and odd analog, q ≤ 13",
        pass,
        &format!("max deviation {worst:.3e} over {checked} characters (tol 1e-9)"),
    );
}

#[test]
fn criterion_06_real_axis_nonvanishing() {
    let mut min_abs = f64::INFINITY;
    let mut all_certified = true;
    let mut checked = 0;
    for chi in primitive_characters(13) {
        checked += 1;
        let f = FunctionHandle::f_chi(chi).unwrap();
        let rep = scan_real_axis(&f, 1.0, 3.0, 0.01).unwrap();
        min_abs = min_abs.min(rep.min_abs);
        all_certified &= rep.certified_nonvanishing;
    }
    report(
        6,
        "f(σ,χ) ≠ 0 on σ ∈ [1,3], q ≤ 13",
        all_certified,
        &format!("certified for all {checked} primitive characters; global min |f| = {min_abs:.3e}"),
    );
}

#[test]
fn criterion_07_trivial_zeros() {
    let mut worst = 0.0f64;
    let mut checked = 0;
    // Davenport–Heilbronn: zeros at σ = −1, −3, −5
    for &target in &[-1.0, -3.0, -5.0] {
        let z = refine_zero(&FunctionHandle::dh(), c(target + 0.01, 0.0)).unwrap();
        assert!(
            (z.location - c(target, 0.0)).norm() < 1e-6,
            "DH refinement drifted to {}",
            z.location
        );
        worst = worst.max(z.residual);
        checked += 1;
    }
    // even-character combinations: zeros at σ = −2, −4
    for chi in primitive_characters(13) {
        if chi.kappa() != 0 {
            continue;
        }
        let f = FunctionHandle::f_chi(chi).unwrap();
        for &target in &[-2.0, -4.0] {
            let z = refine_zero(&f, c(target + 0.01, 0.0)).unwrap();
            assert!(
                (z.location - c(target, 0.0)).norm() < 1e-6,
                "{f} refinement drifted to {}",
                z.location
            );
            worst = worst.max(z.residual);
            checked += 1;
        }
    }
    let pass = worst < 1e-8;
    report(
        7,
        "trivial zeros after 1e-2-offset refinement",
        pass,
        &format!("max |value| {worst:.3e} over {checked} zeros (tol 1e-8)"),
    );
}

#[test]
fn criterion_08_critical_line_factor_recovery() {
    let mut worst = 0.0f64;
    let mut recovered = 0;
    for &q in &[3u64, 4, 5, 8, 13] {
        for chi in enumerate_characters(q).unwrap() {
            if !(chi.is_primitive() && chi.is_real()) {
                continue;
            }
            let f = FunctionHandle::f_chi(chi.clone()).unwrap();
            for t_k in factor_line_zeros(&chi, 20.0).unwrap() {
                let rect =
                    Rectangle::new(0.45, 0.55, t_k.im - 0.1, t_k.im + 0.1).unwrap();
                let out = locate_zeros(&f, &rect, 8).unwrap();
                let best = out
                    .records
                    .iter()
                    .map(|z| (z.location - t_k).norm())
                    .fold(f64::INFINITY, f64::min);
                assert!(
                    best.is_finite(),
                    "no zero located near {t_k} for {f}: {:?}",
                    out.failures
                );
                worst = worst.max(best);
                recovered += 1;
            }
        }
    }
    let pass = worst < 1e-8;
    report(
        8,
        "closed-form factor zeros recovered by locate, t ≤ 20",
        pass,
        &format!("{recovered} zeros recovered, max location error {worst:.3e} (tol 1e-8)"),
    );
}

#[test]
fn criterion_09_zero_counting_sanity() {
    let started = Instant::now();
    let zeta = FunctionHandle::zeta();
    let first = count_zeros(&zeta, &Rectangle::new(0.4, 0.6, 14.0, 14.3).unwrap()).unwrap();
    let empty = count_zeros(&zeta, &Rectangle::new(0.6, 0.9, 10.0, 30.0).unwrap()).unwrap();
    let elapsed = started.elapsed().as_secs_f64();
    let pass = first.count == 1
        && (first.winding_integral - 1.0).abs() < 0.1
        && empty.count == 0
        && empty.winding_integral.abs() < 0.1
        && elapsed < 30.0;
    report(
        9,
        "counting sanity on the first critical-strip window",
        pass,
        &format!(
            "count(0.4,0.6)×(14.0,14.3) = {} (winding {:.4}), count(0.6,0.9)×(10,30) = {} (winding {:.4}), runtime {elapsed:.1}s (cap 30s)",
            first.count, first.winding_integral, empty.count, empty.winding_integral
        ),
    );
}

#[test]
fn criterion_10_off_line_zero_density() {
    let chi = enumerate_characters(5)
        .unwrap()
        .into_iter()
        .find(|ch| !ch.is_real())
        .unwrap();
    let f = FunctionHandle::f_chi(chi).unwrap();
    let table = density_experiment(&f, 0.55, 0.95, &[100.0, 200.0, 400.0], true).unwrap();
    let counts: Vec<u32> = table.rows.iter().map(|r| r.count).collect();
    let nondecreasing = counts.windows(2).all(|w| w[0] <= w[1]);
    let final_count = *counts.last().unwrap();
    let worst_residual = table
        .zeros
        .iter()
        .map(|z| z.residual)
        .fold(0.0f64, f64::max);
    let pass = nondecreasing && final_count >= 1 && worst_residual < 1e-7;
    for fail in &table.failures {
        println!("  density note: {fail}");
    }
    report(
        10,
        "off-line zero density for a non-real character",
        pass,
        &format!(
            "counts {counts:?} at T = [100, 200, 400], {} zeros located, max residual {worst_residual:.3e} (tol 1e-7)",
            table.zeros.len()
        ),
    );
}

#[test]
fn criterion_11_quadratic_dedekind_fe() {
    let mut worst = 0.0f64;
    for &d in &[5i64, -3, -4, 8] {
        // constructor pins (r₁,r₂) = (2,0) / (0,1) and |D_K| = |D|
        let chi = kronecker_character(d).unwrap();
        assert_eq!(chi.modulus(), d.unsigned_abs());
        let h = FunctionHandle::quad_dedekind(d).unwrap();
        let pts = sample_points(&h, 50, 7000 + d.unsigned_abs(), (-3.0, 4.0), 50.0);
        for s in pts {
            worst = worst.max(fe_residual(&h, s).unwrap_or(f64::INFINITY));
        }
    }
    let pass = worst < 1e-7;
    report(
        11,
        "quadratic-field product ζ(s)L(s,χ_D) functional equation",
        pass,
        &format!("max residual {worst:.3e} over D ∈ {{5,−3,−4,8}} × 50 points (tol 1e-7)"),
    );
}

#[test]
fn criterion_12_selberg_catalog() {
    let mut pass = true;
    let mut detail = String::new();
    let mut check = |h: &FunctionHandle, d: f64, q: f64| {
        let desc = selberg_descriptor(h).unwrap();
        let ok = (desc.degree - d).abs() < 1e-9 && (desc.conductor - q).abs() < 1e-6 * q.max(1.0);
        if !ok {
            pass = false;
            detail.push_str(&format!(
                " [{h}: got (d={}, q={}), want ({d}, {q})]",
                desc.degree, desc.conductor
            ));
        }
    };
    check(&FunctionHandle::zeta(), 1.0, 1.0);
    for chi in primitive_characters(13) {
        let q = chi.modulus() as f64;
        check(&FunctionHandle::raw_l(chi.clone()), 1.0, q);
        check(&FunctionHandle::f_chi(chi).unwrap(), 1.0, q);
    }
    for &(r, q) in &[(1u64, 5u64), (2, 7), (1, 12)] {
        let a = Rational::new(r, q).unwrap();
        check(&FunctionHandle::q_fun(a).unwrap(), 1.0, q as f64);
        check(&FunctionHandle::x(a).unwrap(), 1.0, q as f64);
        check(&FunctionHandle::selberg_even(a).unwrap(), 2.0, (q * q) as f64);
        check(&FunctionHandle::selberg_odd(a).unwrap(), 2.0, (q * q) as f64);
    }
    report(
        12,
        "Selberg degree/conductor catalog",
        pass,
        &format!("(1,1) ζ; (1,q) L, f, Q, X; (2,q²) products{detail}"),
    );
}
