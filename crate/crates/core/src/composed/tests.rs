use num_complex::Complex64;

use crate::characters::{enumerate_characters, gauss_sum, DirichletCharacter};
use crate::composed::fe::{fe_residual, fe_spec};
use crate::composed::relations::verify_linear_relations;
use crate::composed::selberg::{degree_conductor, selberg_descriptor};
use crate::composed::*;
use crate::error::EvalError;
use crate::zeta::dirichlet_l_many;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rat(n: u64, d: u64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn even_real_mod5() -> DirichletCharacter {
    enumerate_characters(5)
        .unwrap()
        .into_iter()
        .find(|ch| ch.is_primitive() && ch.is_real() && ch.kappa() == 0)
        .unwrap()
}

fn odd_real_mod3() -> DirichletCharacter {
    enumerate_characters(3)
        .unwrap()
        .into_iter()
        .find(|ch| ch.is_primitive())
        .unwrap()
}

fn non_real_mod5() -> DirichletCharacter {
    enumerate_characters(5)
        .unwrap()
        .into_iter()
        .find(|ch| !ch.is_real())
        .unwrap()
}

#[test]
fn y_vanishes_at_half() {
    let y = FunctionHandle::y(rat(1, 2)).unwrap();
    assert!(y.is_identically_zero());
    for &s in &[c(0.3, 2.0), c(-1.5, 7.0), c(4.0, 0.0)] {
        assert_eq!(y.eval(s).unwrap(), c(0.0, 0.0));
    }
    // X and O too
    assert_eq!(
        FunctionHandle::x(rat(1, 2)).unwrap().eval(c(2.0, 1.0)).unwrap(),
        c(0.0, 0.0)
    );
}

#[test]
fn q_is_mean_of_z_and_p() {
    let a = rat(1, 5);
    let s = c(0.8, 3.0);
    let q = FunctionHandle::q_fun(a).unwrap().eval(s).unwrap();
    let z = FunctionHandle::z(a).unwrap().eval(s).unwrap();
    let p = FunctionHandle::p(a).unwrap().eval(s).unwrap();
    assert!((2.0 * q - z - p).norm() < 1e-12 * (z.norm() + p.norm()));
}

#[test]
fn dh_matches_direct_series() {
    // (secθ/2)(e^{−iθ}L₁(2) + e^{iθ}L₂(2)) with L₁, L₂ summed directly.
    let s = c(2.0, 0.0);
    let k = dh_constants();
    let (chi1, chi2) = dh_characters();
    let mut l1 = c(0.0, 0.0);
    let mut l2 = c(0.0, 0.0);
    for n in 1..200_000u64 {
        let w = (n as f64).powi(-2);
        l1 += chi1.value(n) * w;
        l2 += chi2.value(n) * w;
    }
    let oracle = k.sec_theta / 2.0
        * (c(0.0, -k.theta).exp() * l1 + c(0.0, k.theta).exp() * l2);
    let v = FunctionHandle::dh().eval(s).unwrap();
    assert!((v - oracle).norm() < 1e-9, "{}", (v - oracle).norm());
}

#[test]
fn dh_constants_match_radicals() {
    let k = dh_constants();
    // tan θ = ξ and the defining radical expression
    assert!((k.tan_theta - k.theta.tan()).abs() < 1e-15);
    let root5 = 5f64.sqrt();
    let xi = ((10.0 - 2.0 * root5).sqrt() - 2.0) / (root5 - 1.0);
    assert!((k.xi - xi).abs() < 1e-16);
    assert!(k.theta > 0.0 && k.theta < std::f64::consts::FRAC_PI_2);
}

#[test]
fn dh_hurwitz_form_consistency() {
    for &s in &[c(2.0, 0.0), c(-3.0, 0.0), c(0.5, 11.0), c(1.05, 0.0)] {
        let a = dh_hurwitz_form(s).unwrap();
        let b = FunctionHandle::dh().eval(s).unwrap();
        assert!(
            (a - b).norm() < 1e-9 * a.norm().max(1.0),
            "mismatch at {s}: {:e}",
            (a - b).norm()
        );
    }
}

#[test]
fn dh_mu_nu_reconstruction() {
    let (mu, nu) = dh_mu_nu();
    // closed solution (1/√5, tanθ/√5)
    assert!((mu - 1.0 / 5f64.sqrt()).abs() < 1e-14);
    assert!((nu - dh_constants().tan_theta / 5f64.sqrt()).abs() < 1e-14);
    let o1 = FunctionHandle::o(rat(1, 5)).unwrap();
    let o2 = FunctionHandle::o(rat(2, 5)).unwrap();
    for &s in &[c(2.0, 0.0), c(0.4, 5.0), c(-1.3, 2.5)] {
        let combo = mu * o1.eval(s).unwrap() + nu * o2.eval(s).unwrap();
        let f = FunctionHandle::dh().eval(s).unwrap();
        assert!(
            (combo - f).norm() < 1e-8 * f.norm().max(1.0),
            "μ,ν reconstruction at {s}: {:e}",
            (combo - f).norm()
        );
    }
}

#[test]
fn dh_trivial_zeros() {
    for &sigma in &[-1.0, -3.0] {
        let v = FunctionHandle::dh().eval(c(sigma, 0.0)).unwrap();
        assert!(v.norm() < 1e-10, "f({sigma}) = {v}");
    }
}

#[test]
fn f_chi_half_point_identity() {
    // f(1/2,χ) = 2√q·L(1/2,χ) for even real χ mod 5
    let chi = even_real_mod5();
    let f = FunctionHandle::f_chi(chi.clone()).unwrap();
    let s = c(0.5, 0.0);
    let v = f.eval(s).unwrap();
    let l = dirichlet_l_many(s, &[&chi]).unwrap()[0];
    let rhs = 2.0 * 5f64.sqrt() * l;
    assert!((v - rhs).norm() < 1e-12 * rhs.norm().max(1.0));
}

#[test]
fn f_chi_real_factorization() {
    // f(s,χ) = (q^s + i^{−κ}G(χ))·L(s,χ) for real primitive χ
    for chi in [even_real_mod5(), odd_real_mod3()] {
        let q = chi.modulus() as f64;
        let g = gauss_sum(&chi).value;
        let i_mk = if chi.kappa() == 0 { c(1.0, 0.0) } else { c(0.0, -1.0) };
        let f = FunctionHandle::f_chi(chi.clone()).unwrap();
        for &s in &[c(0.3, 4.0), c(1.7, -2.0), c(-2.2, 9.0)] {
            let v = f.eval(s).unwrap();
            let l = dirichlet_l_many(s, &[&chi]).unwrap()[0];
            let rhs = (cpow(q, s) + i_mk * g) * l;
            assert!(
                (v - rhs).norm() < 1e-10 * rhs.norm().max(1.0),
                "factorization at {s}"
            );
        }
    }
}

#[test]
fn conjugate_modulus_symmetry_on_real_axis() {
    // |L(σ,χ)| = |L(σ,χ̄)| bit-for-bit: conjugating the character mirrors
    // the arithmetic exactly.
    let chi = non_real_mod5();
    let chi_bar = chi.conjugate();
    for &sigma in &[0.7, 1.3, 2.0] {
        let vals = dirichlet_l_many(c(sigma, 0.0), &[&chi, &chi_bar]).unwrap();
        assert_eq!(vals[0].norm().to_bits(), vals[1].norm().to_bits());
    }
}

#[test]
fn vaughan_reconstruction() {
    // (1+λ)V₊/2 + (1−λ)V₋/2 = L(s,χ)
    let chi = non_real_mod5();
    let vp = FunctionHandle::v_plus(chi.clone()).unwrap();
    let vm = FunctionHandle::v_minus(chi.clone()).unwrap();
    let lambda = crate::characters::lambda_chi(&chi).unwrap();
    for &s in &[c(2.0, 3.0), c(0.4, -7.0)] {
        let l = dirichlet_l_many(s, &[&chi]).unwrap()[0];
        let rec = (lambda + 1.0) * vp.eval(s).unwrap() / 2.0
            + (c(1.0, 0.0) - lambda) * vm.eval(s).unwrap() / 2.0;
        assert!((rec - l).norm() < 1e-10 * l.norm().max(1.0));
    }
}

#[test]
fn vaughan_requires_unit_lambda_away_from_pm_one() {
    // real primitive characters have λ = 1
    assert!(matches!(
        FunctionHandle::v_plus(even_real_mod5()),
        Err(EvalError::Domain(_))
    ));
}

#[test]
fn fe_spec_catalog_entries() {
    let q = fe_spec(&FunctionHandle::q_fun(rat(1, 3)).unwrap()).unwrap();
    assert_eq!((q.cos_power, q.sin_power, q.kappa_shift), (1, 0, 0));
    assert_eq!(q.scale_base, 1.0);
    assert_eq!(q.sign, 1.0);

    let dh = fe_spec(&FunctionHandle::dh()).unwrap();
    assert_eq!((dh.cos_power, dh.sin_power), (0, 1));
    assert_eq!(dh.scale_base, 5.0);
    assert_eq!(dh.scale_shift, -0.5);

    let vm = fe_spec(&FunctionHandle::v_minus(non_real_mod5()).unwrap()).unwrap();
    assert_eq!(vm.sign, -1.0);
    assert_eq!(vm.scale_base, 5.0);
    assert_eq!(vm.scale_shift, -0.5);
    assert_eq!(vm.kappa_shift, 1); // mod-5 non-real characters are odd
}

#[test]
fn fe_residuals_small() {
    // the catalog closes at generic points
    let zd = FunctionHandle::dedekind_composite(
        [1, 1, 0, 0, 0, 0],
        [rat(1, 3), rat(1, 4), rat(1, 3), rat(1, 5), rat(2, 5), rat(1, 7)],
        even_real_mod5(),
        odd_real_mod3(),
        None,
    )
    .unwrap();
    let handles: Vec<FunctionHandle> = vec![
        FunctionHandle::zeta(),
        FunctionHandle::raw_l(non_real_mod5()),
        FunctionHandle::z(rat(1, 3)).unwrap(),
        FunctionHandle::p(rat(2, 5)).unwrap(),
        FunctionHandle::y(rat(1, 3)).unwrap(),
        FunctionHandle::o(rat(1, 5)).unwrap(),
        FunctionHandle::q_fun(rat(1, 2)).unwrap(),
        FunctionHandle::x(rat(1, 3)).unwrap(),
        FunctionHandle::dh(),
        FunctionHandle::f_chi(even_real_mod5()).unwrap(),
        FunctionHandle::f_chi(non_real_mod5()).unwrap(),
        FunctionHandle::g_chi(even_real_mod5()).unwrap(),
        FunctionHandle::v_plus(non_real_mod5()).unwrap(),
        FunctionHandle::v_minus(non_real_mod5()).unwrap(),
        FunctionHandle::selberg_even(rat(1, 4)).unwrap(),
        FunctionHandle::selberg_odd(rat(1, 3)).unwrap(),
        FunctionHandle::quad_dedekind(5).unwrap(),
        FunctionHandle::quad_dedekind(-3).unwrap(),
        zd,
    ];
    let pts = [c(0.7, 11.0), c(-1.2, 4.0), c(2.6, -8.0), c(0.3, 2.2)];
    for h in &handles {
        for &s in &pts {
            let r = fe_residual(h, s).unwrap();
            assert!(r < 1e-8, "residual {r:e} for {h} at {s}");
        }
    }
}

#[test]
fn fe_factor_composition_is_identity() {
    // applying the equation at s and then at 1−s must come back to the
    // start: Φ_F(s)·Φ_partner(1−s) = 1
    let handles = vec![
        FunctionHandle::zeta(),
        FunctionHandle::raw_l(non_real_mod5()),
        FunctionHandle::z(rat(1, 5)).unwrap(),
        FunctionHandle::y(rat(1, 3)).unwrap(),
        FunctionHandle::dh(),
        FunctionHandle::f_chi(odd_real_mod3()).unwrap(),
        FunctionHandle::v_minus(non_real_mod5()).unwrap(),
        FunctionHandle::selberg_odd(rat(1, 3)).unwrap(),
        FunctionHandle::quad_dedekind(8).unwrap(),
    ];
    for h in handles {
        let spec = fe_spec(&h).unwrap();
        let partner_spec = fe_spec(&spec.partner).unwrap();
        for &s in &[c(0.3, 2.0), c(-1.4, 17.0), c(2.2, -31.0)] {
            let product =
                spec.factor(s).unwrap() * partner_spec.factor(c(1.0, 0.0) - s).unwrap();
            assert!(
                (product - 1.0).norm() < 1e-10,
                "composition closure failed for {h} at {s}: {product}"
            );
        }
    }
}

#[test]
fn fe_swapped_pairs() {
    // Z(1−s,a) = Γcos(s)·P(s,a): the partner really is the other family.
    let a = rat(1, 5);
    let s = c(1.8, 3.0);
    let z = FunctionHandle::z(a).unwrap();
    let spec = fe_spec(&z).unwrap();
    assert_eq!(spec.partner.kind_name(), "p");
    let lhs = z.eval(c(1.0, 0.0) - s).unwrap();
    let rhs = spec.factor(s).unwrap() * spec.partner.eval(s).unwrap();
    assert!((lhs - rhs).norm() < 1e-10 * lhs.norm().max(1.0));
}

#[test]
fn h_factor_properties() {
    // symmetry
    let s = c(0.3, 2.0);
    let h1 = h_factor(s, 7).unwrap();
    let h2 = h_factor(c(1.0, 0.0) - s, 7).unwrap();
    assert!((h1 - h2).norm() < 1e-15 * h1.norm());
    // geometric expansion of q^s H(s,q) for σ > 1/2: the 20-term truncation
    // carries a tail of ratio^20/(1−ratio), which bounds the discrepancy
    let q = 3.0;
    for &sig in &[0.8, 1.4] {
        let s = c(sig, 0.0);
        let lhs = cpow(q, s) * h_factor(s, 3).unwrap();
        let mut series = c(0.0, 0.0);
        for k in 0..20 {
            series += (-q).powi(k) * cpow(q, -2.0 * k as f64 * s);
        }
        let ratio = q.powf(1.0 - 2.0 * sig);
        let tail_bound = ratio.powi(20) / (1.0 - ratio);
        assert!(
            (lhs - series).norm() <= tail_bound.max(1e-10) * 1.5,
            "geometric expansion drift {:e} vs bound {:e}",
            (lhs - series).norm(),
            tail_bound
        );
    }
    // pole on the σ = 1/2 ladder
    let t0 = std::f64::consts::PI / (2.0 * 7f64.ln());
    assert!(matches!(
        h_factor(c(0.5, t0), 7),
        Err(EvalError::Pole(_))
    ));
}

#[test]
fn g_chi_pole_catalog() {
    let g = FunctionHandle::g_chi(even_real_mod5()).unwrap();
    let ln5 = 5f64.ln();
    let poles = g.poles_in(0.0, 1.0, 0.0, 10.0);
    // t = π(2k+1)/(2 ln 5) for k = 0, 1, …
    let expected: Vec<f64> = (0..)
        .map(|k| std::f64::consts::PI * (2 * k + 1) as f64 / (2.0 * ln5))
        .take_while(|&t| t < 10.0)
        .collect();
    assert_eq!(poles.len(), expected.len());
    for (p, t) in poles.iter().zip(expected) {
        assert!((p.re - 0.5).abs() < 1e-15 && (p.im - t).abs() < 1e-9);
    }
}

#[test]
fn linear_relations_close() {
    for &(q, s) in &[
        (5u64, c(2.0, 1.0)),
        (4, c(3.0, 0.0)),
        (12, c(0.6, 5.0)),
        (7, c(1.5, -2.0)),
    ] {
        let report = verify_linear_relations(q, s).unwrap();
        assert_eq!(report.rows.len(), 8);
        for row in &report.rows {
            assert!(
                row.max_mismatch < 1e-10,
                "relation {} at q={q}, s={s}: {:e}",
                row.name,
                row.max_mismatch
            );
        }
    }
}

#[test]
fn linear_relations_degenerate_modulus() {
    let report = verify_linear_relations(1, c(2.5, 1.0)).unwrap();
    // ζ(s,1) = ζ(s) is the only surviving content; the parity rows are vacuous
    assert!(report.overall_max() < 1e-12);
    let vacuous: Vec<_> = report.rows.iter().filter(|r| r.instances == 0).collect();
    assert!(!vacuous.is_empty());
}

#[test]
fn selberg_catalog() {
    let check = |h: &FunctionHandle, d: f64, q: f64| {
        let desc = selberg_descriptor(h).unwrap();
        assert!(
            (desc.degree - d).abs() < 1e-12,
            "degree of {h}: {} vs {d}",
            desc.degree
        );
        assert!(
            (desc.conductor - q).abs() < 1e-9 * q,
            "conductor of {h}: {} vs {q}",
            desc.conductor
        );
        assert!((desc.root_number.norm() - 1.0).abs() < 1e-10);
    };
    check(&FunctionHandle::zeta(), 1.0, 1.0);
    check(&FunctionHandle::raw_l(non_real_mod5()), 1.0, 5.0);
    check(&FunctionHandle::raw_l(odd_real_mod3()), 1.0, 3.0);
    check(&FunctionHandle::f_chi(even_real_mod5()).unwrap(), 1.0, 5.0);
    check(&FunctionHandle::q_fun(rat(1, 7)).unwrap(), 1.0, 7.0);
    check(&FunctionHandle::x(rat(1, 7)).unwrap(), 1.0, 7.0);
    check(&FunctionHandle::selberg_even(rat(1, 5)).unwrap(), 2.0, 25.0);
    check(&FunctionHandle::selberg_odd(rat(2, 5)).unwrap(), 2.0, 25.0);
    // excluded members
    for h in [
        FunctionHandle::z(rat(1, 5)).unwrap(),
        FunctionHandle::p(rat(1, 5)).unwrap(),
        FunctionHandle::y(rat(1, 5)).unwrap(),
        FunctionHandle::o(rat(1, 5)).unwrap(),
        FunctionHandle::dh(),
    ] {
        assert!(matches!(
            selberg_descriptor(&h),
            Err(EvalError::Unsupported(_))
        ));
    }
}

#[test]
fn degree_conductor_formula() {
    use crate::composed::selberg::GammaFactorSpec;
    // ζ-shaped factor: Q = π^{−1/2}, λ = 1/2 → degree 1, conductor 1
    let spec = GammaFactorSpec::new(
        1.0 / std::f64::consts::PI.sqrt(),
        vec![(0.5, c(0.0, 0.0))],
    )
    .unwrap();
    let (d, q) = degree_conductor(&spec);
    assert!((d - 1.0).abs() < 1e-15 && (q - 1.0).abs() < 1e-12);
    // ℜ(μ) < 0 rejected
    assert!(GammaFactorSpec::new(1.0, vec![(0.5, c(-0.1, 0.0))]).is_err());
}

#[test]
fn quad_dedekind_construction() {
    for d in [5i64, -3, -4, 8, 12] {
        let h = FunctionHandle::quad_dedekind(d).unwrap();
        assert_eq!(h.oscillation_modulus(), d.unsigned_abs());
    }
    assert!(matches!(
        FunctionHandle::quad_dedekind(20),
        Err(EvalError::NotFundamental(20))
    ));
}

#[test]
fn dedekind_composite_validation() {
    let a6 = [rat(1, 3), rat(1, 4), rat(1, 3), rat(1, 5), rat(2, 5), rat(1, 7)];
    // min exponent constraint
    assert!(matches!(
        FunctionHandle::dedekind_composite(
            [1, 0, 0, 0, 0, 0],
            a6,
            even_real_mod5(),
            odd_real_mod3(),
            None
        ),
        Err(EvalError::Domain(_))
    ));
    // parity of the character slots enforced
    assert!(FunctionHandle::dedekind_composite(
        [1, 1, 0, 0, 0, 0],
        a6,
        odd_real_mod3(),
        even_real_mod5(),
        None
    )
    .is_err());
    // default N is the squared normalizer: l=(1,1,0,0,1,0) with the slots
    // above gives M = q₁^{2}·q₄^{1}·q_ev^{1} = 9·5·5
    let h = FunctionHandle::dedekind_composite(
        [1, 1, 0, 0, 1, 0],
        a6,
        even_real_mod5(),
        odd_real_mod3(),
        None,
    )
    .unwrap();
    match &h {
        FunctionHandle::DedekindComposite(p) => {
            assert_eq!(p.n_scale, (9u64 * 5 * 5).pow(2));
        }
        _ => unreachable!(),
    }
}

#[test]
fn handle_spec_round_trip() {
    let handles = vec![
        FunctionHandle::zeta(),
        FunctionHandle::z(rat(2, 7)).unwrap(),
        FunctionHandle::f_chi(non_real_mod5()).unwrap(),
        FunctionHandle::quad_dedekind(-4).unwrap(),
        FunctionHandle::dh(),
    ];
    for h in handles {
        let spec = h.to_spec();
        let json = serde_json::to_string(&spec).unwrap();
        let parsed: HandleSpec = serde_json::from_str(&json).unwrap();
        let rebuilt = parsed.build().unwrap();
        assert_eq!(rebuilt.kind_name(), h.kind_name());
        let s = c(1.7, 2.3);
        assert_eq!(rebuilt.eval(s).unwrap(), h.eval(s).unwrap());
    }
}

#[test]
fn rational_parsing() {
    assert_eq!(Rational::parse("2/5").unwrap(), rat(2, 5));
    assert_eq!(Rational::parse("3/6").unwrap(), rat(1, 2));
    assert!(Rational::parse("0.4").is_err());
    assert!(Rational::parse("0/5").is_err());
    assert!(Rational::parse("7/5").is_err());
}

#[test]
fn domain_violations() {
    assert!(FunctionHandle::z(rat(2, 3)).is_err()); // a > 1/2
    assert!(FunctionHandle::f_chi(enumerate_characters(6).unwrap().pop().unwrap()).is_err());
    assert!(FunctionHandle::selberg_odd(rat(1, 2)).is_err()); // q ≥ 3
}
