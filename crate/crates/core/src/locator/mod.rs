//! Locating, classifying and probing pole-skipping points of two-argument
//! S-matrix functions.

mod newton;
mod skip;

pub use newton::{newton_1d, winding_number};
pub use skip::{FnSkip, ModelSkip, SkipFunction};

use crate::complex::{C64, ZERO};
use crate::error::{Error, Result};
use crate::types::{Classification, Mobius, PoleOrigin, PoleSkipPoint, ZeroOrigin};
use nalgebra::DMatrix;
use std::f64::consts::PI;

/// Defaults for [`find_skip`].
pub const FIND_TOL: f64 = 1e-12;
pub const FIND_MAX_ITER: usize = 50;
/// Defaults for [`slope_probe`].
pub const PROBE_RADIUS: f64 = 1e-3;
pub const PROBE_ANGLES: usize = 16;
/// Largest accepted relative misfit of a Mobius fit.
pub const FIT_RESIDUAL_MAX: f64 = 1e-2;

fn fd_step(z: C64) -> f64 {
    1e-6 * (1.0 + z.norm())
}

/// Partial derivatives of `(N, D)` in both arguments by central differences.
fn jacobian<S: SkipFunction + ?Sized>(f: &S, p: C64, k: C64) -> Result<[[C64; 2]; 2]> {
    let hp = fd_step(p);
    let hk = fd_step(k);
    let (np1, dp1) = f.parts(p + hp, k)?;
    let (np0, dp0) = f.parts(p - hp, k)?;
    let (nk1, dk1) = f.parts(p, k + hk)?;
    let (nk0, dk0) = f.parts(p, k - hk)?;
    Ok([
        [(np1 - np0) / (2.0 * hp), (nk1 - nk0) / (2.0 * hk)],
        [(dp1 - dp0) / (2.0 * hp), (dk1 - dk0) / (2.0 * hk)],
    ])
}

/// `|det J|` with each row scaled to unit size; near zero when the zero sets touch.
fn normalized_jacobian_det(j: &[[C64; 2]; 2]) -> f64 {
    let r0 = j[0][0].norm().max(j[0][1].norm());
    let r1 = j[1][0].norm().max(j[1][1].norm());
    if r0 == 0.0 || r1 == 0.0 {
        return 0.0;
    }
    (j[0][0] * j[1][1] - j[0][1] * j[1][0]).norm() / (r0 * r1)
}

/// Newton iteration on the simultaneous zeros of the numerator and denominator of `S`.
pub fn find_skip<S: SkipFunction + ?Sized>(f: &S, seed: (C64, C64), tol: f64) -> Result<PoleSkipPoint> {
    let (mut p, mut k) = seed;
    for _ in 0..FIND_MAX_ITER {
        let (n, d) = f.parts(p, k)?;
        let j = jacobian(f, p, k)?;
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det == ZERO || normalized_jacobian_det(&j) < 1e-14 {
            if n.norm() + d.norm() == 0.0 {
                return Err(Error::DegenerateDoubleZero);
            }
            return Err(Error::NoConvergence { iterations: FIND_MAX_ITER });
        }
        let mut dp = (j[1][1] * n - j[0][1] * d) / det;
        let mut dk = (j[0][0] * d - j[1][0] * n) / det;
        let size = dp.norm().max(dk.norm());
        if size > 0.5 {
            dp *= 0.5 / size;
            dk *= 0.5 / size;
        }
        p -= dp;
        k -= dk;
        if size < tol {
            let j = jacobian(f, p, k)?;
            if normalized_jacobian_det(&j) < 1e-8 {
                return Err(Error::DegenerateDoubleZero);
            }
            let (pa, ka) = f.axes();
            return Ok(PoleSkipPoint::new(0, pa, ka, p, k));
        }
    }
    Err(Error::NoConvergence { iterations: FIND_MAX_ITER })
}

/// One homogeneous least-squares fit `N (c cos + d sin) = D (a cos + b sin)` over the probe circle.
fn fit_mobius<S: SkipFunction + ?Sized>(f: &S, p: C64, k: C64, delta: f64, n_angles: usize) -> Result<Mobius> {
    let mut rows = Vec::with_capacity(n_angles);
    for j in 0..n_angles {
        let th = 2.0 * PI * (j as f64 + 0.5) / n_angles as f64;
        let (cs, sn) = (th.cos(), th.sin());
        let (n, d) = f.parts(p + delta * cs, k + delta * sn)?;
        rows.push((cs, sn, n, d));
    }
    let mut m = DMatrix::<C64>::zeros(n_angles, 4);
    for (r, &(cs, sn, n, d)) in rows.iter().enumerate() {
        let row = [-d * cs, -d * sn, n * cs, n * sn];
        let norm = row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::FitDegenerate { residual: f64::INFINITY });
        }
        for (c, z) in row.iter().enumerate() {
            m[(r, c)] = z / norm;
        }
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.ok_or(Error::FitDegenerate { residual: f64::INFINITY })?;
    let imin = (0..svd.singular_values.len())
        .min_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]))
        .unwrap_or(0);
    let x: Vec<C64> = (0..4).map(|c| v_t[(imin, c)].conj()).collect();
    let mut fit = Mobius::new(x[0], x[1], x[2], x[3]);
    let mut residual = 0.0f64;
    for &(cs, sn, n, d) in &rows {
        let num = fit.a * cs + fit.b * sn;
        let den = fit.c * cs + fit.d * sn;
        let lhs = n * den;
        let rhs = d * num;
        let scale = lhs.norm().max(rhs.norm());
        let r = if scale == 0.0 { 1.0 } else { (lhs - rhs).norm() / scale };
        residual = residual.max(r);
    }
    fit.residual = residual;
    Ok(fit)
}

/// Local Mobius form of `S` around a located point, with a two-radius consistency check.
pub fn slope_probe<S: SkipFunction + ?Sized>(
    f: &S,
    point: &PoleSkipPoint,
    delta: f64,
    n_angles: usize,
) -> Result<Mobius> {
    if n_angles < 4 {
        return Err(Error::invalid("at least four probe directions are needed"));
    }
    let fit = fit_mobius(f, point.param, point.k, delta, n_angles)?;
    if fit.residual > FIT_RESIDUAL_MAX {
        return Err(Error::FitDegenerate { residual: fit.residual });
    }
    let det = fit.normalized_determinant();
    if det < 1e-8 {
        return Err(Error::FitDegenerate { residual: fit.residual.max(det) });
    }
    let inner = fit_mobius(f, point.param, point.k, delta / 10.0, n_angles)?;
    if inner.residual > FIT_RESIDUAL_MAX || inner.normalized_determinant() < 0.5 * det {
        return Err(Error::FitDegenerate { residual: inner.residual.max(fit.residual) });
    }
    Ok(fit)
}

/// `(b/a, c/a, d/a)`.
pub fn mobius_ratios(m: &Mobius) -> [C64; 3] {
    [m.b / m.a, m.c / m.a, m.d / m.a]
}

/// `max |r_fit - r_expected| / max |r_expected|` over the three ratios.
pub fn ratio_error(fit: &Mobius, expected: &Mobius) -> f64 {
    let r = mobius_ratios(fit);
    let e = mobius_ratios(expected);
    let scale = e.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
    r.iter().zip(e.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max) / scale
}

/// Perturbation of the parameter used to separate the pole from the zero.
const CLASSIFY_EPS: f64 = 1e-3;

/// Origin of the pole and the zero meeting at `point`, from winding numbers of `F+-`.
pub fn classify<S: SkipFunction + ?Sized>(f: &S, point: &PoleSkipPoint) -> Result<Classification> {
    let k0 = point.k;
    let p = point.param + CLASSIFY_EPS;
    let den = |k: C64| Ok(f.parts(p, k)?.1);
    let num = |k: C64| Ok(f.parts(p, k)?.0);
    let k_pole = newton_1d(den, k0, 1e-13, 100)?;
    let k_zero = newton_1d(num, k0, 1e-13, 100)?;
    let sep = (k_pole - k_zero).norm();
    if sep < 1e-9 {
        return Err(Error::DegenerateDoubleZero);
    }
    let r = 0.3 * sep;
    let fp = |k: C64| Ok(f.jost(p, k)?.0);
    let fm = |k: C64| Ok(f.jost(p, k)?.1);
    let wp_pole = winding_number(fp, k_pole, r)?;
    let wm_pole = winding_number(fm, k_pole, r)?;
    let wp_zero = winding_number(fp, k_zero, r)?;
    let wm_zero = winding_number(fm, k_zero, r)?;
    let pole = if wm_pole < 0 {
        PoleOrigin::Redundant
    } else if wp_pole > 0 {
        PoleOrigin::from_jost_zero(f.pole_momentum(point.param, k0), 1e-8)
    } else {
        return Err(Error::AmbiguousWinding { min_modulus: 0.0 });
    };
    let zero = if wp_zero < 0 {
        ZeroOrigin::Redundant
    } else if wm_zero > 0 {
        ZeroOrigin::Physical
    } else {
        return Err(Error::AmbiguousWinding { min_modulus: 0.0 });
    };
    let (pole_family, zero_family) = f.families(point.param, k0);
    Ok(Classification { pole, zero, pole_family, zero_family })
}

/// Checks that `(param, -k)` is also a pole-skipping point and returns it.
pub fn pair_check<S: SkipFunction + ?Sized>(f: &S, point: &PoleSkipPoint, tol: f64) -> Result<PoleSkipPoint> {
    let mirror_k = -point.k;
    let (n, d) = f.parts(point.param, mirror_k)?;
    let j = jacobian(f, point.param, mirror_k)?;
    let gn = j[0][0].norm().max(j[0][1].norm());
    let gd = j[1][0].norm().max(j[1][1].norm());
    let dist = |v: C64, g: f64| if v == ZERO { 0.0 } else if g == 0.0 { f64::INFINITY } else { v.norm() / g };
    let mismatch = dist(n, gn).max(dist(d, gd));
    if mismatch > tol {
        return Err(Error::SymmetryViolation { mismatch });
    }
    let mut m = point.clone();
    m.k = mirror_k;
    m.classification = None;
    m.mobius = None;
    Ok(m)
}
