//! Pole-skipping catalogs against ladder intersections, series roots and the locator.

use poleskip::complex::{c, nonpositive_integer, C64, I};
use poleskip::frobenius::{find_candidates, SeriesFamily, Window};
use poleskip::locator::{classify, find_skip, pair_check, winding_number, ModelSkip, SkipFunction, FIND_TOL};
use poleskip::models::{ladders, one_pole_s, pole_skip_catalog, pt1_s, pt2_s, LadderKind};
use poleskip::{Error, LadderFamily, PoleOrigin, PoleSkipPoint, PotentialModel, ZeroOrigin};

/// A gamma argument `alpha + beta param + gamma k`, over both axes at once.
#[derive(Clone, Copy)]
struct Arg {
    family: LadderFamily,
    alpha: C64,
    beta: C64,
    gamma: C64,
}

impl Arg {
    fn eval(&self, p: C64, k: C64) -> C64 {
        self.alpha + self.beta * p + self.gamma * k
    }
}

fn arg(family: LadderFamily, alpha: C64, beta: C64, gamma: C64) -> Arg {
    Arg { family, alpha, beta, gamma }
}

fn joint_args(model: &str) -> Vec<Arg> {
    use LadderFamily::*;
    let (o, h, r) = (c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0));
    match model {
        // (nu, kappa_C)
        "coulomb" => vec![arg(Pole1, h, o, I), arg(Zero1, h, o, -I)],
        // (nu, k)
        "sinh_sq" => vec![
            arg(Pole1, h, o, -I),
            arg(Pole2, o, r, I),
            arg(Zero1, h, o, I),
            arg(Zero2, o, r, -I),
        ],
        // (kappa, k)
        "cosh_sq" => vec![
            arg(Pole1, o, -h, -I / 2.0),
            arg(Pole2, h, h, -I / 2.0),
            arg(Pole3, o, r, I),
            arg(Zero1, o, -h, I / 2.0),
            arg(Zero2, h, h, I / 2.0),
            arg(Zero3, o, r, -I),
        ],
        _ => unreachable!(),
    }
}

/// Intersections of one pole ladder with one zero ladder over `n <= 10`, keeping
/// points where exactly one pole and one zero meet and applying the half-plane filters.
fn brute_force(model: &str) -> Vec<(C64, C64, LadderFamily)> {
    let args = joint_args(model);
    let mut out: Vec<(C64, C64, LadderFamily)> = Vec::new();
    for pa in args.iter().filter(|a| a.family.is_pole()) {
        for za in args.iter().filter(|a| !a.family.is_pole()) {
            let det = pa.beta * za.gamma - pa.gamma * za.beta;
            if det.norm() < 1e-12 {
                continue;
            }
            for np in 0..=10 {
                for nz in 0..=10 {
                    let r1 = -(np as f64) - pa.alpha;
                    let r2 = -(nz as f64) - za.alpha;
                    let p = (r1 * za.gamma - pa.gamma * r2) / det;
                    let k = (pa.beta * r2 - za.beta * r1) / det;
                    if model != "coulomb" && k.im < -1e-12 {
                        continue;
                    }
                    if model == "cosh_sq" && p.re < 0.5 {
                        continue;
                    }
                    let hits = |pole: bool| {
                        args.iter()
                            .filter(|a| a.family.is_pole() == pole)
                            .filter(|a| nonpositive_integer(a.eval(p, k), 1e-9).is_some())
                            .count()
                    };
                    if hits(true) != 1 || hits(false) != 1 {
                        continue;
                    }
                    if !out.iter().any(|q| (q.0 - p).norm() + (q.1 - k).norm() < 1e-9) {
                        out.push((p, k, pa.family));
                    }
                }
            }
        }
    }
    out
}

fn in_box(p: C64, k: C64) -> bool {
    p.norm() <= 4.6 && k.norm() <= 4.6
}

fn model_for(name: &str) -> PotentialModel {
    match name {
        "coulomb" => PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0)),
        "sinh_sq" => PotentialModel::sinh_sq(c(0.0, 0.0)),
        "cosh_sq" => PotentialModel::cosh_sq(c(1.0, 0.0)),
        _ => unreachable!(),
    }
}

#[test]
fn catalogs_equal_ladder_intersections() {
    for name in ["coulomb", "sinh_sq", "cosh_sq"] {
        let cat = pole_skip_catalog(&model_for(name), 12).unwrap();
        let cat: Vec<&PoleSkipPoint> = cat.iter().filter(|p| in_box(p.param, p.k)).collect();
        let brute: Vec<_> = brute_force(name).into_iter().filter(|(p, k, _)| in_box(*p, *k)).collect();
        for (p, k, fam) in &brute {
            let hit = cat.iter().find(|q| q.distance(*p, *k) < 1e-12);
            let hit = hit.unwrap_or_else(|| panic!("{name}: ({p}, {k}) missing from the catalog"));
            let cls = hit.classification.unwrap();
            assert_eq!(cls.pole_family, Some(*fam), "{name}: ({p}, {k})");
        }
        for q in &cat {
            assert!(
                brute.iter().any(|(p, k, _)| q.distance(*p, *k) < 1e-12),
                "{name}: catalog point ({}, {}) is not a ladder intersection",
                q.param,
                q.k
            );
        }
        assert_eq!(cat.len(), brute.len(), "{name}");
    }
}

#[test]
fn ladder_points_are_gamma_poles() {
    for m in [
        PotentialModel::coulomb(c(-0.7, 0.2), c(1.3, -0.4)),
        PotentialModel::sinh_sq(c(0.4, 0.9)),
        PotentialModel::cosh_sq(c(3.1, 0.0)),
    ] {
        for spec in ladders(&m).unwrap() {
            assert_eq!(spec.kind == LadderKind::Pole, spec.family.is_pole());
            for (n, v) in spec.points(10).into_iter().enumerate() {
                let a = spec.gamma_argument.eval(v);
                assert!((a + n as f64).norm() <= 1e-12, "{:?} n={n}", spec.family);
            }
        }
    }
}

#[test]
fn ladder_generators() {
    let sinh = ladders(&PotentialModel::sinh_sq(c(0.75, 0.0))).unwrap();
    let pole2 = sinh.iter().find(|s| s.family == LadderFamily::Pole2).unwrap();
    for n in 0..5 {
        assert!((pole2.at(n) - c(0.0, n as f64 + 1.0)).norm() < 1e-15);
    }
    let kappa = c(2.2, 0.0);
    let cosh = ladders(&PotentialModel::cosh_sq(kappa)).unwrap();
    let zero2 = cosh.iter().find(|s| s.family == LadderFamily::Zero2).unwrap();
    for n in 0..5 {
        assert!((zero2.at(n) - I * (kappa + 1.0 + 2.0 * n as f64)).norm() < 1e-14);
    }
    let nu = c(0.3, 0.1);
    let coul = ladders(&PotentialModel::coulomb(c(1.0, 0.0), nu)).unwrap();
    let zero = coul.iter().find(|s| s.family == LadderFamily::Zero1).unwrap();
    for n in 0..5 {
        let kappa_c = zero.at(n);
        assert!((nu + 0.5 - I * kappa_c + n as f64).norm() < 1e-14);
    }
}

#[test]
fn catalog_listings() {
    let sinh = pole_skip_catalog(&PotentialModel::sinh_sq(c(0.0, 0.0)), 2).unwrap();
    for (nu, k) in [(c(-1.0, 0.0), c(0.0, 0.5)), (c(-2.0, 0.0), c(0.0, 0.5)), (c(-2.0, 0.0), c(0.0, 1.5))] {
        assert!(sinh.iter().any(|p| p.distance(nu, k) < 1e-15), "({nu}, {k})");
    }
    for nu in [0.5, -0.5] {
        let p = sinh.iter().find(|p| p.distance(c(nu, 0.0), c(0.0, 1.0)) < 1e-15).unwrap();
        assert!(p.is_redundant());
    }
    let cosh = pole_skip_catalog(&PotentialModel::cosh_sq(c(1.0, 0.0)), 2).unwrap();
    let pts: Vec<(C64, C64)> = cosh.iter().map(|p| (p.k, p.param)).collect();
    let want = [(0.0, 2.0), (1.0, 1.0), (0.0, 4.0), (2.0, 1.0), (2.0, 2.0)];
    assert_eq!(pts.len(), want.len());
    for (k, kappa) in want {
        assert!(pts.iter().any(|(pk, pp)| (pk - c(0.0, k)).norm() + (pp - c(kappa, 0.0)).norm() < 1e-15));
    }
    for p in cosh.iter().filter(|p| p.k.im > 0.0) {
        assert!(p.is_redundant() && p.param.re >= 0.5);
    }
    let one = pole_skip_catalog(&PotentialModel::one_pole(0.3), 3).unwrap();
    assert_eq!(one.len(), 1);
    assert!(one[0].param.norm() == 0.0 && one[0].k.norm() == 0.0);
}

#[test]
fn series_roots_reproduce_catalog() {
    // Coulomb over e^2 at k = 1: nu = -n/2 and the root e^2 = 2 kappa_C
    let k = c(1.0, 0.0);
    let cat = pole_skip_catalog(&PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0)), 4).unwrap();
    let found = find_candidates(&SeriesFamily::coulomb_over_e2(k), 4, &Window::default()).unwrap();
    for p in &cat {
        assert!(
            found.iter().any(|q| q.distance(p.param, p.k) < 1e-8),
            "coulomb ({}, {}) not found",
            p.param,
            p.k
        );
    }
    assert_eq!(found.len(), cat.len());

    // sinh: series-visible catalog points (k != 0)
    let cat = pole_skip_catalog(&PotentialModel::sinh_sq(c(0.0, 0.0)), 4).unwrap();
    let found = find_candidates(&SeriesFamily::sinh_sq_over_k(), 8, &Window::default()).unwrap();
    // redundant points sit in the tilde frame; k = 0 points are invisible to the series
    for p in cat.iter().filter(|p| p.series_order.is_some_and(|n| n <= 8) && !p.is_redundant()) {
        let q = found
            .iter()
            .find(|q| q.distance(p.param, p.k) < 1e-8)
            .unwrap_or_else(|| panic!("sinh ({}, {}) not found", p.param, p.k));
        assert_eq!(q.series_order, p.series_order, "({}, {})", p.param, p.k);
    }
}

#[test]
fn tilde_frame_candidates() {
    // cosh: nu~ = -n/2 gives k = i n, roots kappa = 1..n
    let found = find_candidates(&SeriesFamily::tilde_cosh_sq_over_kappa(), 3, &Window::default()).unwrap();
    for n in 1..=3u32 {
        let mut kappas: Vec<f64> = found.iter().filter(|p| p.n == n).map(|p| p.param.re).collect();
        kappas.sort_by(f64::total_cmp);
        let want: Vec<f64> = (1..=n).map(|v| v as f64).collect();
        assert_eq!(kappas.len(), want.len(), "n = {n}");
        for (a, b) in kappas.iter().zip(&want) {
            assert!((a - b).abs() < 1e-8);
        }
        for p in found.iter().filter(|p| p.n == n) {
            assert!((p.k - c(0.0, n as f64)).norm() < 1e-12);
        }
    }
    // sinh: nu~ = -n/2 gives k = i n; the roots are the redundant catalog points
    let found = find_candidates(&SeriesFamily::tilde_sinh_sq_over_nu(), 2, &Window::default()).unwrap();
    let cat = pole_skip_catalog(&PotentialModel::sinh_sq(c(0.0, 0.0)), 2).unwrap();
    for p in cat.iter().filter(|p| p.is_redundant()) {
        let rooted = found.iter().any(|q| q.distance(p.param, p.k) < 1e-8);
        let mirror = found.iter().any(|q| q.distance(-p.param, p.k) < 1e-8);
        assert!(rooted || mirror, "({}, {})", p.param, p.k);
    }
}

#[test]
fn zero_potential_has_no_isolated_roots() {
    let fam = SeriesFamily::free_over_k();
    for n in [1usize, 3, 5] {
        for k in [c(0.3, 0.1), c(-2.0, 1.5)] {
            assert_eq!(fam.det(n, k).unwrap(), c(0.0, 0.0));
        }
    }
    for n in [2usize, 4] {
        let a = fam.det(n, c(0.5, 0.0)).unwrap();
        let b = fam.det(n, c(1.0, 0.0)).unwrap();
        assert!((b / a - c(2f64.powi(n as i32), 0.0)).norm() < 1e-9, "n = {n}");
    }
    match find_candidates(&fam, 5, &Window { center: c(3.0, 3.0), half_width: 1.0, grid: 8 }) {
        Err(Error::NoRootInWindow) => {}
        other => panic!("{other:?}"),
    }
}

fn relocate_all(model: PotentialModel, n_max: u32) {
    let f = ModelSkip::new(model);
    for p in pole_skip_catalog(&model, n_max).unwrap() {
        let seed = (p.param + c(0.05, -0.03), p.k + c(-0.04, 0.05));
        let q = find_skip(&f, seed, FIND_TOL).unwrap_or_else(|e| panic!("{} ({}, {}): {e}", model.name(), p.param, p.k));
        assert!(q.distance(p.param, p.k) <= 1e-10, "{}: ({}, {}) -> ({}, {})", model.name(), p.param, p.k, q.param, q.k);
    }
}

#[test]
fn locator_relocates_catalog_points() {
    relocate_all(PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0)), 4);
    relocate_all(PotentialModel::sinh_sq(c(0.0, 0.0)), 4);
    relocate_all(PotentialModel::cosh_sq(c(1.0, 0.0)), 4);
    relocate_all(PotentialModel::one_pole(0.0), 1);
}

#[test]
fn locator_examples() {
    let sinh = ModelSkip::new(PotentialModel::sinh_sq(c(0.0, 0.0)));
    let p = find_skip(&sinh, (c(-1.05, 0.0), c(0.0, 0.48)), FIND_TOL).unwrap();
    assert!(p.distance(c(-1.0, 0.0), c(0.0, 0.5)) < 1e-12);
    let coul = ModelSkip::new(PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0)));
    let p = find_skip(&coul, (c(-0.9, 0.0), c(0.0, 0.45)), FIND_TOL).unwrap();
    assert!(p.distance(c(-1.0, 0.0), c(0.0, 0.5)) < 1e-12);
    let one = ModelSkip::new(PotentialModel::one_pole(0.0));
    let p = find_skip(&one, (c(0.1, 0.0), c(0.0, 0.05)), FIND_TOL).unwrap();
    assert!(p.distance(c(0.0, 0.0), c(0.0, 0.0)) < 1e-12);
}

#[test]
fn classification_matches_ladder_labels() {
    for model in [
        PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0)),
        PotentialModel::coulomb(c(-1.0, 0.0), c(0.0, 0.0)),
        PotentialModel::sinh_sq(c(0.0, 0.0)),
        PotentialModel::cosh_sq(c(1.0, 0.0)),
    ] {
        let f = ModelSkip::new(model);
        for p in pole_skip_catalog(&model, 4).unwrap() {
            if p.k.norm() == 0.0 {
                continue;
            }
            let want = p.classification.unwrap();
            let got = classify(&f, &p).unwrap_or_else(|e| panic!("{} ({}, {}): {e}", model.name(), p.param, p.k));
            assert_eq!(got.pole, want.pole, "{} ({}, {})", model.name(), p.param, p.k);
            assert_eq!(got.zero, ZeroOrigin::Physical);
            assert_eq!(got.pole_family, want.pole_family, "{} ({}, {})", model.name(), p.param, p.k);
            assert_eq!(got.zero_family, want.zero_family, "{} ({}, {})", model.name(), p.param, p.k);
        }
    }
}

#[test]
fn jost_zero_origins() {
    // sinh nu = 2: F+ vanishes at k = -2.5i (antibound); F- is finite there
    let f = ModelSkip::new(PotentialModel::sinh_sq(c(2.0, 0.0)));
    let fp = |k: C64| Ok(f.jost(c(2.0, 0.0), k)?.0);
    assert_eq!(winding_number(fp, c(0.0, -2.5), 0.1).unwrap(), 1);
    let lbl = PoleOrigin::from_jost_zero(f.pole_momentum(c(2.0, 0.0), c(0.0, -2.5)), 1e-8);
    assert_eq!(lbl, PoleOrigin::Antibound);

    // attractive Coulomb at nu = 1/2: zero of F+ at kappa_C = i, momentum e^2/(2 kappa_C) = i/2
    let f = ModelSkip::new(PotentialModel::coulomb(c(-1.0, 0.0), c(0.5, 0.0)));
    let fp = |kc: C64| Ok(f.jost(c(0.5, 0.0), kc)?.0);
    assert_eq!(winding_number(fp, c(0.0, 1.0), 0.1).unwrap(), 1);
    let lbl = PoleOrigin::from_jost_zero(f.pole_momentum(c(0.5, 0.0), c(0.0, 1.0)), 1e-8);
    assert_eq!(lbl, PoleOrigin::Bound);
}

#[test]
fn mirror_points() {
    let f = ModelSkip::new(PotentialModel::sinh_sq(c(0.0, 0.0)));
    let p = PoleSkipPoint::new(1, poleskip::Axis::Nu, poleskip::Axis::K, c(-1.0, 0.0), c(0.0, 0.5));
    let m = pair_check(&f, &p, 1e-8).unwrap();
    assert!((m.k - c(0.0, -0.5)).norm() < 1e-15);
    // a plain pole has no partner
    let p = PoleSkipPoint::new(1, poleskip::Axis::Nu, poleskip::Axis::K, c(2.0, 0.0), c(0.0, -2.5));
    assert!(matches!(pair_check(&f, &p, 1e-8), Err(Error::SymmetryViolation { .. })));
}

#[test]
fn closed_form_examples() {
    assert!((one_pole_s(c(0.0, 0.0), 0.3).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
    assert!((one_pole_s(c(0.3, 0.0), 0.0).unwrap() - c(-1.0, 0.0)).norm() < 1e-15);
    assert!((one_pole_s(c(1.0, 0.0), 1.0).unwrap() - c(0.0, -1.0)).norm() < 1e-15);
    assert!((pt1_s(c(1.0, 0.0), c(0.5, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
    assert!((pt2_s(c(1.3, 0.0), c(1.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
    assert!(matches!(pt1_s(c(0.0, 0.5), c(-1.0, 0.0)), Err(Error::IndeterminateRatio { .. })));
    assert!(matches!(pt1_s(c(0.0, 1.0), c(0.5, 0.0)), Err(Error::IndeterminateRatio { .. })));
    assert!(matches!(pt2_s(c(0.0, 1.0), c(1.0, 0.0)), Err(Error::IndeterminateRatio { .. })));
}

#[test]
fn coulomb_slope_sign() {
    // S ~ +2ik (d_nu - i d_kappa) / (d_nu + i d_kappa) near (nu, kappa_C) = (-1, i/2) at k = 1;
    // Gamma(-1 + e) ~ -1/e and the prefactor e^{3 i pi / 2} (2k)^{-2i kappa} = -2ik fix the sign
    let f = ModelSkip::new(PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0)));
    let p = find_skip(&f, (c(-1.02, 0.0), c(0.0, 0.49)), FIND_TOL).unwrap();
    let want = poleskip::Mobius::new(c(0.0, 2.0), c(2.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    for (delta, tol) in [(1e-3, 1e-2), (1e-5, 1e-4)] {
        let fit = poleskip::locator::slope_probe(&f, &p, delta, 16).unwrap();
        let err = poleskip::locator::ratio_error(&fit, &want);
        assert!(err <= tol, "delta = {delta}: {err}");
    }
}
