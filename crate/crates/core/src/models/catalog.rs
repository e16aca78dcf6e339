use super::PotentialModel;
use crate::complex::{c, C64};
use crate::error::Result;
use crate::types::{Classification, LadderFamily, PoleOrigin, PoleSkipPoint, ZeroOrigin};
use std::cmp::Ordering;

const HALF_PLANE_TOL: f64 = 1e-12;

/// Pole-skipping points up to ladder level `n_max`, restricted to the upper half
/// `k`-plane (Coulomb points are listed in `(nu, kappa_C)` without restriction).
///
/// Points are ordered by level, then `Im k`, then `Re param`.
pub fn pole_skip_catalog(model: &PotentialModel, n_max: u32) -> Result<Vec<PoleSkipPoint>> {
    let (pa, ka) = model.axes();
    let mut out = Vec::new();
    let mut push = |n: u32, param: C64, k: C64, order: Option<u32>, cls: Classification| {
        let mut p = PoleSkipPoint::new(n, pa, ka, param, k);
        p.series_order = order;
        p.classification = Some(cls);
        out.push(p);
    };
    match *model {
        PotentialModel::OnePole { .. } => {
            if n_max >= 1 {
                push(
                    1,
                    c(0.0, 0.0),
                    c(0.0, 0.0),
                    None,
                    classify(PoleOrigin::Threshold, LadderFamily::SimplePole, LadderFamily::SimpleZero),
                );
            }
        }
        PotentialModel::Coulomb { e2, .. } => {
            for level in 1..=n_max {
                let nu = c(-(level as f64) / 2.0, 0.0);
                for n_p in 0..level {
                    let n_z = level - 1 - n_p;
                    // nu + 1/2 + i kappa = -n_p and nu + 1/2 - i kappa = -n_z
                    let kappa = c(0.0, -((n_z as f64) - (n_p as f64)) / 2.0);
                    let origin = if kappa.norm() < HALF_PLANE_TOL {
                        PoleOrigin::Threshold
                    } else {
                        PoleOrigin::from_jost_zero(e2 / (2.0 * kappa), HALF_PLANE_TOL)
                    };
                    push(level, nu, kappa, Some(level), classify(origin, LadderFamily::Pole1, LadderFamily::Zero1));
                }
            }
        }
        PotentialModel::SinhSq { .. } => {
            for level in 1..=n_max {
                let n = level - 1;
                // Pole1 meets Zero1 at nu = -(n+1), k = i(n - n_p + 1/2)
                let nu = c(-(level as f64), 0.0);
                for n_p in 0..=n {
                    let k = c(0.0, n as f64 - n_p as f64 + 0.5);
                    push(
                        level,
                        nu,
                        k,
                        Some(2 * level),
                        classify(PoleOrigin::Bound, LadderFamily::Pole1, LadderFamily::Zero1),
                    );
                }
                // threshold points k = 0, nu = -n_p - 1/2
                push(
                    level,
                    c(-(n as f64) - 0.5, 0.0),
                    c(0.0, 0.0),
                    None,
                    classify(PoleOrigin::Threshold, LadderFamily::Pole1, LadderFamily::Zero1),
                );
                // Pole2 meets Zero1 at k = i(n'+1), nu = m - 1/2 with -n' <= m <= n'+1
                let k = c(0.0, level as f64);
                for m in -(n as i64)..=(n as i64 + 1) {
                    push(
                        level,
                        c(m as f64 - 0.5, 0.0),
                        k,
                        Some(level),
                        classify(PoleOrigin::Redundant, LadderFamily::Pole2, LadderFamily::Zero1),
                    );
                }
            }
        }
        PotentialModel::CoshSq { .. } => {
            for level in 1..=n_max {
                // Pole1 meets Zero1 at k = 0, kappa = 2 n_p + 2
                push(
                    level,
                    c(2.0 * level as f64, 0.0),
                    c(0.0, 0.0),
                    None,
                    classify(PoleOrigin::Threshold, LadderFamily::Pole1, LadderFamily::Zero1),
                );
                // Pole3 meets Zero1 (kappa = level mod 2) or Zero2 at k = i level, kappa = 1..level
                let k = c(0.0, level as f64);
                for kappa in 1..=level {
                    let zero = if (level - kappa) % 2 == 0 { LadderFamily::Zero1 } else { LadderFamily::Zero2 };
                    push(
                        level,
                        c(kappa as f64, 0.0),
                        k,
                        Some(level),
                        classify(PoleOrigin::Redundant, LadderFamily::Pole3, zero),
                    );
                }
            }
        }
    }
    out.sort_by(catalog_order);
    Ok(out)
}

fn classify(pole: PoleOrigin, pole_family: LadderFamily, zero_family: LadderFamily) -> Classification {
    Classification {
        pole,
        zero: ZeroOrigin::Physical,
        pole_family: Some(pole_family),
        zero_family: Some(zero_family),
    }
}

/// Level, then `Im k`, then `Re param`.
pub(crate) fn catalog_order(a: &PoleSkipPoint, b: &PoleSkipPoint) -> Ordering {
    a.n.cmp(&b.n)
        .then(a.k.im.total_cmp(&b.k.im))
        .then(a.param.re.total_cmp(&b.param.re))
        .then(a.k.re.total_cmp(&b.k.re))
        .then(a.param.im.total_cmp(&b.param.im))
}
