//! Numerical Jost functions against closed forms, and the cutoff variants.

use poleskip::complex::{c, C64, I};
use poleskip::locator::winding_number;
use poleskip::models::{pt1_jost_plus, pt1_regular, pt2_jost_plus};
use poleskip::solver::{
    integrate_jost, integrate_regular, ir_cutoff_jost, ir_cutoff_s, jost_functions, jost_report, regular_below_cutoff,
    uv_cutoff_jost, NumericalPotential, SolverConfig, Tail,
};
use poleskip::Error;

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn free_solutions() {
    let cfg = SolverConfig::default();
    let pot = NumericalPotential::free();
    let k = c(1.4, -0.2);
    for x in [0.5, 2.0, 5.0] {
        let phi = integrate_regular(&pot, k, c(0.5, 0.0), x, &cfg).unwrap();
        assert!(rel(phi[0], (k * x).sin() / k) < 1e-9);
        let j = integrate_jost(&pot, k, x, &cfg).unwrap();
        assert!(rel(j.f_plus[0], (I * k * x).exp()) < 1e-12);
        assert!(rel(j.f_minus[0], (-I * k * x).exp()) < 1e-12);
    }
    let pair = jost_functions(&pot, k, c(0.5, 0.0), &cfg).unwrap();
    assert!((pair.f_plus - 1.0).norm() < 1e-9 && (pair.f_minus - 1.0).norm() < 1e-9);
    assert!((pair.s().unwrap() - 1.0).norm() < 1e-9);
}

#[test]
fn sinh_regular_solution_matches_closed_form() {
    let (nu, k) = (c(0.75, 0.0), c(1.0, 0.0));
    let pot = NumericalPotential::sinh_sq(nu);
    for x in [0.1, 0.8, 2.5] {
        let phi = integrate_regular(&pot, k, nu, x, &SolverConfig::default()).unwrap();
        assert!(rel(phi[0], pt1_regular(k, nu, x).unwrap()) < 1e-8, "x = {x}");
    }
}

#[test]
fn jost_functions_match_closed_forms() {
    let cfg = SolverConfig::default();
    let (nu, k) = (c(0.75, 0.0), c(1.2, 0.0));
    let r = jost_report(&NumericalPotential::sinh_sq(nu), k, nu, &cfg).unwrap();
    assert!(rel(r.pair.f_plus, pt1_jost_plus(k, nu).unwrap()) < 1e-6);
    assert!(r.drift <= 1e-8, "drift {}", r.drift);
    let (kappa, k) = (c(1.5, 0.0), c(0.8, 0.0));
    let r = jost_report(&NumericalPotential::cosh_sq(kappa), k, c(0.5, 0.0), &cfg).unwrap();
    assert!(rel(r.pair.f_plus, pt2_jost_plus(k, kappa).unwrap()) < 1e-6);
    assert!(r.drift <= 1e-8, "drift {}", r.drift);
}

#[test]
fn wronskian_at_checkpoints() {
    let cfg = SolverConfig::default();
    let k = c(0.8, 0.3);
    for pot in [NumericalPotential::cosh_sq(c(1.5, 0.0)), NumericalPotential::sinh_sq(c(1.2, 0.2))] {
        for x in [0.2, 0.7, 1.5, 3.0, 6.0] {
            let w = integrate_jost(&pot, k, x, &cfg).unwrap().wronskian();
            assert!((w + 2.0 * I * k).norm() <= 1e-8, "x = {x}: {w}");
        }
    }
}

#[test]
fn stability_window_and_origin_checks() {
    let cfg = SolverConfig::default();
    let pot = NumericalPotential::sinh_sq(c(0.75, 0.0));
    assert!(matches!(integrate_jost(&pot, c(0.3, 2.0), 1.0, &cfg), Err(Error::InvalidArgument(_))));
    let wide = SolverConfig { k_im_max: 2.5, ..cfg };
    assert!(integrate_jost(&pot, c(0.3, 2.0), 1.0, &wide).is_ok());
    let strong = NumericalPotential::sinh_sq(c(-1.2, 0.0));
    assert!(matches!(
        integrate_regular(&strong, c(1.0, 0.0), c(-1.2, 0.0), 1.0, &cfg),
        Err(Error::OriginSingularityTooStrong { .. })
    ));
}

#[test]
fn slow_tail_is_reported() {
    let pot = NumericalPotential::new(
        |x| c(1.0 / (1.0 + x).powi(2), 0.0),
        c(0.0, 0.0),
        c(0.0, 0.0),
        Tail::Exponential { rate: 1.0, coeffs: None },
    );
    let r = integrate_jost(&pot, c(1.0, 0.0), 1.0, &SolverConfig::default());
    assert!(matches!(r, Err(Error::TailNotReached { .. })), "{r:?}");
}

#[test]
fn uv_cutoff_of_free_region_is_a_no_op() {
    let cfg = SolverConfig::default();
    for k in [c(0.6, 0.0), c(1.7, -0.3)] {
        let f = uv_cutoff_jost(&NumericalPotential::free(), 0.01, k, &cfg).unwrap();
        assert!((f - 1.0).norm() < 1e-8, "{f}");
    }
}

#[test]
fn uv_regular_solution_is_sine_below_cutoff() {
    let a = 0.05;
    let pot = NumericalPotential::sinh_sq(c(0.75, 0.0)).with_uv_cutoff(a);
    let k = c(1.3, 0.1);
    let v0 = pot.eval(a);
    for x in [0.01, 0.03, 0.049] {
        let phi = integrate_regular(&pot, k, c(0.5, 0.0), x, &SolverConfig::default()).unwrap();
        let exact = regular_below_cutoff(v0, k, x);
        assert!(rel(phi[0], exact[0]) < 1e-9 && rel(phi[1], exact[1]) < 1e-9, "x = {x}");
    }
}

/// Largest relative spread of `F+^r(k) / F+(k)` over a few momenta.
fn uv_ratio_spread(nu_pot: C64, nu_ref: C64, a: f64) -> f64 {
    let cfg = SolverConfig::default();
    let pot = NumericalPotential::sinh_sq(nu_pot);
    let ratios: Vec<C64> = [c(0.6, 0.0), c(0.9, 0.1), c(1.3, 0.0), c(1.8, -0.1)]
        .into_iter()
        .map(|k| uv_cutoff_jost(&pot, a, k, &cfg).unwrap() / pt1_jost_plus(k, nu_ref).unwrap())
        .collect();
    ratios.iter().map(|r| rel(*r, ratios[0])).fold(0.0, f64::max)
}

#[test]
fn uv_cutoff_is_proportional_to_the_dominant_branch() {
    let nu = c(0.75, 0.0);
    let s1 = uv_ratio_spread(nu, nu, 1e-3);
    let s2 = uv_ratio_spread(nu, nu, 5e-4);
    assert!(s1 <= 1e-2 && s2 <= 1e-2, "{s1} {s2}");
    assert!(s2 < s1);
    // the continued index -0.75 gives the same potential; the +0.75 branch dominates
    assert!(uv_ratio_spread(-nu, nu, 1e-3) <= 1e-2);
}

#[test]
fn ir_cutoff_of_zero_potential() {
    let cfg = SolverConfig::default();
    for r in [1.0, 5.0, 12.0] {
        for k in [c(0.5, 0.0), c(1.2, 0.4)] {
            let s = ir_cutoff_s(&NumericalPotential::free(), r, k, c(0.5, 0.0), &cfg).unwrap();
            assert!((s - 1.0).norm() < 1e-9, "R = {r}: {s}");
        }
    }
}

#[test]
fn ir_cutoff_removes_the_redundant_pole() {
    let nu = c(2.0, 0.0);
    let cfg = SolverConfig { k_im_max: 2.0, ..SolverConfig::default() };
    let pot = NumericalPotential::sinh_sq(nu);
    let fp = |k: C64| Ok(ir_cutoff_jost(&pot, 12.0, k, nu, &cfg)?.f_plus);
    let fm = |k: C64| Ok(ir_cutoff_jost(&pot, 12.0, k, nu, &cfg)?.f_minus);
    assert_eq!(winding_number(fp, c(0.0, 1.0), 0.2).unwrap(), 0);
    assert_eq!(winding_number(fm, c(0.0, 1.0), 0.2).unwrap(), 0);
}
