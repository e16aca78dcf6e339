use super::expansions::{coulomb_series, csch_sq_laurent, free_series, tilde_cosh_sq, tilde_sinh_sq};
use super::{det_truncation, SeriesPotential};
use crate::complex::{C64, I};
use crate::error::{Error, Result};
use crate::locator::newton_1d;
use crate::models::canonical_kappa;
use crate::models::catalog_order;
use crate::types::{Axis, PoleSkipPoint};

type Build = Box<dyn Fn(C64, C64) -> SeriesPotential<C64> + Send + Sync>;
type Place = Box<dyn Fn(C64, C64) -> (C64, C64) + Send + Sync>;

/// Laurent coefficients of the x-frame series kept for the sinh family.
const SERIES_ORDER: usize = 40;

/// A series potential with one free complex parameter.
///
/// `build(nu, p)` returns the potential at centrifugal index `nu`, and
/// `place(nu, p)` maps a root `p` found at `nu = -n/2` to `(param, k)` coordinates.
pub struct SeriesFamily {
    pub param_axis: Axis,
    pub k_axis: Axis,
    build: Build,
    place: Place,
}

impl SeriesFamily {
    pub fn new(
        axes: (Axis, Axis),
        build: impl Fn(C64, C64) -> SeriesPotential<C64> + Send + Sync + 'static,
        place: impl Fn(C64, C64) -> (C64, C64) + Send + Sync + 'static,
    ) -> Self {
        SeriesFamily { param_axis: axes.0, k_axis: axes.1, build: Box::new(build), place: Box::new(place) }
    }

    /// Coulomb at fixed `e^2`, free momentum; points in `(nu, kappa_C)`.
    pub fn coulomb_over_k(e2: C64) -> Self {
        Self::new((Axis::Nu, Axis::KappaC), move |nu, k| coulomb_series(e2, nu, k), move |nu, k| (nu, e2 / (2.0 * k)))
    }

    /// Coulomb at fixed momentum, free `e^2`; points in `(nu, kappa_C)`.
    pub fn coulomb_over_e2(k: C64) -> Self {
        Self::new((Axis::Nu, Axis::KappaC), move |nu, e2| coulomb_series(e2, nu, k), move |nu, e2| (nu, e2 / (2.0 * k)))
    }

    /// `1/sinh^2` expanded at the origin, free momentum; points in `(nu, k)`.
    pub fn sinh_sq_over_k() -> Self {
        let unit: Vec<C64> = csch_sq_laurent(SERIES_ORDER);
        Self::new(
            (Axis::Nu, Axis::K),
            move |nu, k| {
                let g = nu * nu - 0.25;
                SeriesPotential::new(nu, k, unit.iter().map(|c| g * c).collect())
            },
            |nu, k| (nu, k),
        )
    }

    /// Zero potential, free momentum.
    pub fn free_over_k() -> Self {
        Self::new((Axis::Nu, Axis::K), free_series, |nu, k| (nu, k))
    }

    /// `1/sinh^2` in the frame `x~ = e^{-2x}`, free `nu`; `nu~ = -n/2` fixes `k = i n`.
    pub fn tilde_sinh_sq_over_nu() -> Self {
        Self::new(
            (Axis::Nu, Axis::K),
            |nu_t, nu| tilde_sinh_sq(nu, -2.0 * I * nu_t, SERIES_ORDER),
            |nu_t, nu| (nu, -2.0 * I * nu_t),
        )
    }

    /// `1/cosh^2` in the frame `x~ = e^{-2x}`, free `kappa`; roots reported with `Re kappa >= 1/2`.
    pub fn tilde_cosh_sq_over_kappa() -> Self {
        Self::new(
            (Axis::Kappa, Axis::K),
            |nu_t, kappa| tilde_cosh_sq(kappa, -2.0 * I * nu_t, SERIES_ORDER),
            |nu_t, kappa| (canonical_kappa(kappa), -2.0 * I * nu_t),
        )
    }

    pub fn potential(&self, nu: C64, p: C64) -> SeriesPotential<C64> {
        (self.build)(nu, p)
    }

    /// `det M^(n)` at `nu = -n/2` as a function of the free parameter.
    pub fn det(&self, n: usize, p: C64) -> Result<C64> {
        let nu = C64::new(-(n as f64) / 2.0, 0.0);
        det_truncation(&self.potential(nu, p), n)
    }
}

/// Square search window `|Re(p - center)|, |Im(p - center)| <= half_width` seeded on a `grid x grid` lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub center: C64,
    pub half_width: f64,
    pub grid: usize,
}

impl Default for Window {
    fn default() -> Self {
        Window { center: C64::new(0.0, 0.0), half_width: 10.0, grid: 40 }
    }
}

impl Window {
    fn contains(&self, z: C64) -> bool {
        let d = z - self.center;
        d.re.abs() <= self.half_width && d.im.abs() <= self.half_width
    }

    fn seeds(&self) -> impl Iterator<Item = C64> + '_ {
        let g = self.grid.max(1);
        let step = 2.0 * self.half_width / g as f64;
        (0..g * g).map(move |idx| {
            let (i, j) = (idx / g, idx % g);
            self.center
                + C64::new(-self.half_width + (i as f64 + 0.5) * step, -self.half_width + (j as f64 + 0.31) * step)
        })
    }
}

/// Roots of `det M^(n)` for `n = 1 ..= n_max` inside the window.
///
/// Orders whose determinant vanishes identically in the parameter carry no
/// information and are skipped.
pub fn find_candidates(family: &SeriesFamily, n_max: usize, window: &Window) -> Result<Vec<PoleSkipPoint>> {
    let mut out: Vec<PoleSkipPoint> = Vec::new();
    for n in 1..=n_max {
        let nu = C64::new(-(n as f64) / 2.0, 0.0);
        let f = |p: C64| family.det(n, p);
        let probes = [C64::new(0.37, 0.11), C64::new(-1.3, 0.7), C64::new(2.1, -1.9), C64::new(-0.2, -3.3)];
        let mut scale = 0.0f64;
        for z in probes {
            scale = scale.max(f(window.center + z)?.norm());
        }
        if scale == 0.0 {
            continue;
        }
        let mut roots: Vec<(C64, f64)> = Vec::new();
        for seed in window.seeds() {
            let Ok(r) = newton_1d(f, seed, 1e-14, 100) else {
                continue;
            };
            if !window.contains(r) {
                continue;
            }
            let val = f(r)?.norm();
            if val > 1e-8 * scale.max(1.0) {
                continue;
            }
            match roots.iter_mut().find(|(z, _)| (*z - r).norm() < 1e-6 * (1.0 + r.norm())) {
                Some(slot) => {
                    if val < slot.1 {
                        *slot = (r, val);
                    }
                }
                None => roots.push((r, val)),
            }
        }
        for (r, _) in roots {
            let (param, k) = (family.place)(nu, r);
            // parameter symmetries can map two roots onto one point
            if out.iter().any(|q| q.n == n as u32 && q.distance(param, k) < 1e-6 * (1.0 + param.norm() + k.norm())) {
                continue;
            }
            let mut pt = PoleSkipPoint::new(n as u32, family.param_axis, family.k_axis, param, k);
            pt.series_order = Some(n as u32);
            out.push(pt);
        }
    }
    if out.is_empty() {
        return Err(Error::NoRootInWindow);
    }
    out.sort_by(catalog_order);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;

    #[test]
    fn coulomb_second_order_roots() {
        let e2 = c(0.8, 0.0);
        let pts = find_candidates(&SeriesFamily::coulomb_over_k(e2), 2, &Window::default()).unwrap();
        // n = 1 has det = e^2, never zero; n = 2 has k = +- i e^2
        assert_eq!(pts.len(), 2);
        for p in &pts {
            assert_eq!(p.n, 2);
            assert!((p.k.norm() - 0.5).abs() < 1e-10, "kappa = {}", p.k);
        }
    }

    #[test]
    fn sinh_second_order_roots() {
        let pts = find_candidates(&SeriesFamily::sinh_sq_over_k(), 2, &Window::default()).unwrap();
        let ks: Vec<C64> = pts.iter().filter(|p| p.n == 2).map(|p| p.k).collect();
        assert_eq!(ks.len(), 2);
        assert!(ks.iter().any(|k| (k - c(0.0, 0.5)).norm() < 1e-10));
        assert!(ks.iter().any(|k| (k - c(0.0, -0.5)).norm() < 1e-10));
    }
}
