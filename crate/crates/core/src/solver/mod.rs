//! Numerical half-line scattering: regular and Jost solutions, Wronskian
//! extraction of the Jost functions, and IR/UV cutoff deformations.

mod dp45;

pub use dp45::{integrate, State, StepControl};

use crate::complex::{C64, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::frobenius::{cosh_sq_tail, sinh_sq_tail, solve_series, tilde_transform, Branch};
use crate::models::{JostConvention, JostPair, PotentialModel};
use std::fmt;
use std::sync::Arc;

/// Large-`x` behavior of a potential.
#[derive(Debug, Clone, PartialEq)]
pub enum Tail {
    /// `V = 0` for `x >= support`.
    Compact { support: f64 },
    /// `V ~ sum_{n >= 1} a_n e^{-n s x}`; `coeffs[i]` holds `a_{i+1}` when known.
    Exponential { rate: f64, coeffs: Option<Vec<C64>> },
}

/// A potential given by a sampler together with its origin and tail data.
///
/// Near the origin `V = centrifugal / x^2 + v_minus1 / x + O(1)` with
/// `centrifugal = nu^2 - 1/4`.
#[derive(Clone)]
pub struct NumericalPotential {
    sampler: Arc<dyn Fn(f64) -> C64 + Send + Sync>,
    pub centrifugal: C64,
    pub v_minus1: C64,
    pub tail: Tail,
}

impl fmt::Debug for NumericalPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalPotential")
            .field("centrifugal", &self.centrifugal)
            .field("v_minus1", &self.v_minus1)
            .field("tail", &self.tail)
            .finish()
    }
}

const TAIL_TERMS: usize = 120;

impl NumericalPotential {
    pub fn new(sampler: impl Fn(f64) -> C64 + Send + Sync + 'static, centrifugal: C64, v_minus1: C64, tail: Tail) -> Self {
        NumericalPotential { sampler: Arc::new(sampler), centrifugal, v_minus1, tail }
    }

    /// `V = 0`.
    pub fn free() -> Self {
        Self::new(|_| ZERO, ZERO, ZERO, Tail::Compact { support: 0.0 })
    }

    /// `(nu^2 - 1/4) / sinh^2 x`.
    pub fn sinh_sq(nu: C64) -> Self {
        let g = nu * nu - 0.25;
        Self::new(
            move |x| g / x.sinh().powi(2),
            g,
            ZERO,
            Tail::Exponential { rate: 2.0, coeffs: Some(sinh_sq_tail(nu, TAIL_TERMS)) },
        )
    }

    /// `-kappa (kappa - 1) / cosh^2 x`.
    pub fn cosh_sq(kappa: C64) -> Self {
        let g = -kappa * (kappa - 1.0);
        Self::new(
            move |x| g / x.cosh().powi(2),
            ZERO,
            ZERO,
            Tail::Exponential { rate: 2.0, coeffs: Some(cosh_sq_tail(kappa, TAIL_TERMS)) },
        )
    }

    /// The short-range analytic models; Coulomb and the one-pole model have no usable potential.
    pub fn from_model(model: &PotentialModel) -> Result<Self> {
        match *model {
            PotentialModel::SinhSq { nu } => Ok(Self::sinh_sq(nu)),
            PotentialModel::CoshSq { kappa } => Ok(Self::cosh_sq(kappa)),
            _ => Err(Error::invalid(format!("{} has no short-range potential for the solver", model.name()))),
        }
    }

    pub fn eval(&self, x: f64) -> C64 {
        (self.sampler)(x)
    }

    /// Potential set to zero beyond `r`.
    pub fn with_ir_cutoff(&self, r: f64) -> Self {
        let s = self.sampler.clone();
        Self {
            sampler: Arc::new(move |x| if x < r { s(x) } else { ZERO }),
            centrifugal: self.centrifugal,
            v_minus1: self.v_minus1,
            tail: Tail::Compact { support: r },
        }
    }

    /// Potential frozen at `V(a)` below `a`; the regular solution becomes `sin(k0 x)/k0`.
    pub fn with_uv_cutoff(&self, a: f64) -> Self {
        let s = self.sampler.clone();
        let v0 = s(a);
        Self {
            sampler: Arc::new(move |x| if x < a { v0 } else { s(x) }),
            centrifugal: ZERO,
            v_minus1: ZERO,
            tail: self.tail.clone(),
        }
    }
}

/// IR and UV cutoff radii.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CutoffSpec {
    pub ir_radius: Option<f64>,
    pub uv_radius: Option<f64>,
}

impl CutoffSpec {
    pub fn validate(&self) -> Result<()> {
        if let Some(a) = self.uv_radius {
            if !(a > 0.0) {
                return Err(Error::invalid("UV cutoff radius must be positive"));
            }
        }
        if let Some(r) = self.ir_radius {
            if !(r > 0.0) {
                return Err(Error::invalid("IR cutoff radius must be positive"));
            }
        }
        if let (Some(a), Some(r)) = (self.uv_radius, self.ir_radius) {
            if a >= r {
                return Err(Error::invalid("UV cutoff must lie inside the IR cutoff"));
            }
        }
        Ok(())
    }

    pub fn apply(&self, pot: &NumericalPotential) -> Result<NumericalPotential> {
        self.validate()?;
        let mut p = pot.clone();
        if let Some(r) = self.ir_radius {
            p = p.with_ir_cutoff(r);
        }
        if let Some(a) = self.uv_radius {
            p = p.with_uv_cutoff(a);
        }
        Ok(p)
    }
}

/// How the Jost solutions are started at large `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailMode {
    /// Convergent series in `e^{-s x}` when the tail coefficients are known, plane waves otherwise.
    #[default]
    Auto,
    /// Plane waves with a first-order WKB phase at the point where `|V|` reaches the tail tolerance.
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Per-step relative local error.
    pub rtol: f64,
    /// Largest `|Im k|` accepted.
    pub k_im_max: f64,
    /// `|V|` at which plane-wave seeding starts.
    pub tail_eps: f64,
    /// Matching point; defaults to `1/s` for exponential tails and the support radius for compact ones.
    pub x_match: Option<f64>,
    /// Largest accepted relative drift of `F+-` between `x_match` and `1.5 x_match`.
    pub drift_tol: f64,
    pub tail_mode: TailMode,
    /// Value of `e^{-s x}` at which the tail series is evaluated.
    pub series_w: f64,
    pub max_steps: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            rtol: 1e-11,
            k_im_max: 1.0,
            tail_eps: 1e-12,
            x_match: None,
            drift_tol: 1e-6,
            tail_mode: TailMode::Auto,
            series_w: 0.05,
            max_steps: 2_000_000,
        }
    }
}

impl SolverConfig {
    fn control(&self) -> StepControl {
        StepControl { rtol: self.rtol, max_steps: self.max_steps }
    }

    fn check_k(&self, k: C64) -> Result<()> {
        if k.im.abs() > self.k_im_max {
            return Err(Error::invalid(format!(
                "|Im k| = {} exceeds the stability window {}",
                k.im.abs(),
                self.k_im_max
            )));
        }
        Ok(())
    }
}

/// `W[f, g] = f g' - f' g`.
pub fn wronskian(f: State, g: State) -> C64 {
    f[0] * g[1] - f[1] * g[0]
}

fn check_nu(pot: &NumericalPotential, nu: C64) -> Result<()> {
    let c = nu * nu - 0.25;
    if (c - pot.centrifugal).norm() > 1e-10 * (1.0 + c.norm()) {
        return Err(Error::invalid(format!(
            "nu = {nu} does not match the centrifugal coefficient {}",
            pot.centrifugal
        )));
    }
    Ok(())
}

/// Regular solution `phi ~ x^{1/2 + nu}` and its derivative at `x_match`.
pub fn integrate_regular(pot: &NumericalPotential, k: C64, nu: C64, x_match: f64, cfg: &SolverConfig) -> Result<State> {
    check_nu(pot, nu)?;
    let lambda = 0.5 + nu;
    if lambda.re <= -0.5 {
        return Err(Error::OriginSingularityTooStrong { exponent: lambda });
    }
    let x0 = 1e-6 * (1.0 + nu.norm());
    if x_match <= x0 {
        return Err(Error::invalid("matching point lies inside the origin layer"));
    }
    let lead = pot.eval(x0) * x0 * x0;
    if (lead - pot.centrifugal).norm() > 1e-3 * (1.0 + pot.centrifugal.norm()) + 2.0 * x0 * pot.v_minus1.norm() {
        return Err(Error::OriginSingularityTooStrong { exponent: lambda });
    }
    let denom = ONE + 2.0 * nu;
    let psi1 = if pot.v_minus1 == ZERO {
        ZERO
    } else if denom.norm() < 1e-12 {
        return Err(Error::Breakdown { order: 1, residual: pot.v_minus1.norm() });
    } else {
        pot.v_minus1 / denom
    };
    let xl = (lambda * x0.ln()).exp();
    let phi = xl * (ONE + psi1 * x0);
    let dphi = xl * (lambda / x0 + (lambda + 1.0) * psi1);
    let v = |x: f64| pot.eval(x);
    integrate(&v, k, x0, [phi, dphi], x_match, cfg.control())
}

/// `f+` and `f-` with their derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JostSolutions {
    pub x: f64,
    pub f_plus: State,
    pub f_minus: State,
}

impl JostSolutions {
    /// `W[f+, f-]`, equal to `-2ik` for an exact pair.
    pub fn wronskian(&self) -> C64 {
        wronskian(self.f_plus, self.f_minus)
    }
}

/// Plane-wave seed `e^{sign ikx}` with the first-order phase `exp(sign i/(2k) int_x^inf V)`.
fn plane_wave_seed(pot: &NumericalPotential, k: C64, sign: f64, x: f64, rate: f64) -> State {
    let vx = pot.eval(x);
    let integral = if rate > 0.0 { vx / rate } else { ZERO };
    let phase = sign * I * k * x + sign * I * integral / (2.0 * k);
    let f = phase.exp();
    [f, (sign * I * k - sign * I * vx / (2.0 * k)) * f]
}

/// Jost solution from the convergent `e^{-s x}` series.
fn series_seed(coeffs: &[C64], rate: f64, k: C64, sign: f64, w: f64) -> Result<(f64, State)> {
    // sign = -1 builds f- (nu~ = ik/s); sign = +1 builds f+ (nu~ = -ik/s)
    let kk = -sign * k;
    let pot = tilde_transform(C64::new(rate, 0.0), coeffs, kk);
    let sol = solve_series(&pot, Branch::Plus, coeffs.len())?;
    let nu_t = pot.nu;
    let mut sum = ZERO;
    let mut dsum = ZERO;
    let mut wp = 1.0;
    let mut converged = false;
    for (m, psi) in sol.coefficients.iter().enumerate() {
        let t = psi * wp;
        sum += t;
        dsum += t * (nu_t + m as f64);
        if m > 4 && t.norm() <= 1e-17 * sum.norm() {
            converged = true;
            break;
        }
        wp *= w;
    }
    if !converged {
        return Err(Error::NoConvergence { iterations: sol.coefficients.len() });
    }
    let x = -w.ln() / rate;
    let e = (sign * I * k * x).exp();
    Ok((x, [e * sum, -rate * e * dsum]))
}

/// Starting point and data for one Jost solution (`sign = +1` for `f+`).
fn jost_seed(pot: &NumericalPotential, k: C64, sign: f64, cfg: &SolverConfig) -> Result<(f64, State)> {
    match &pot.tail {
        Tail::Compact { support } => {
            let x = support.max(0.0);
            let e = (sign * I * k * x).exp();
            Ok((x, [e, sign * I * k * e]))
        }
        Tail::Exponential { rate, coeffs } => {
            if let (TailMode::Auto, Some(a)) = (cfg.tail_mode, coeffs) {
                return series_seed(a, *rate, k, sign, cfg.series_w);
            }
            let x_max = tail_start(pot, *rate, cfg.tail_eps)?;
            Ok((x_max, plane_wave_seed(pot, k, sign, x_max, *rate)))
        }
    }
}

/// Smallest `x` (on a doubling-then-bisection search) with `|V(x)| <= eps`, capped at `40/s`.
fn tail_start(pot: &NumericalPotential, rate: f64, eps: f64) -> Result<f64> {
    let cap = 40.0 / rate;
    if pot.eval(cap).norm() > eps {
        return Err(Error::TailNotReached { x_max: cap });
    }
    let mut hi = (1.0 / rate).min(cap);
    while pot.eval(hi).norm() > eps && hi < cap {
        hi = (2.0 * hi).min(cap);
    }
    let mut lo = hi / 2.0;
    if pot.eval(lo).norm() <= eps {
        return Ok(lo);
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if pot.eval(mid).norm() > eps {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// `f+-` and their derivatives at `x_match`, each integrated inward from its own seed.
pub fn integrate_jost(pot: &NumericalPotential, k: C64, x_match: f64, cfg: &SolverConfig) -> Result<JostSolutions> {
    cfg.check_k(k)?;
    if k == ZERO {
        return Err(Error::invalid("Jost solutions are degenerate at k = 0"));
    }
    let v = |x: f64| pot.eval(x);
    let mut out = [[ZERO; 2]; 2];
    for (slot, sign) in [(0usize, 1.0), (1usize, -1.0)] {
        let (xs, y) = jost_seed(pot, k, sign, cfg)?;
        out[slot] = if xs > x_match {
            integrate(&v, k, xs, y, x_match, cfg.control())?
        } else {
            // beyond the support the plane waves are exact
            let e = (sign * I * k * x_match).exp();
            match pot.tail {
                Tail::Compact { .. } => [e, sign * I * k * e],
                Tail::Exponential { .. } => integrate(&v, k, xs, y, x_match, cfg.control())?,
            }
        };
    }
    Ok(JostSolutions { x: x_match, f_plus: out[0], f_minus: out[1] })
}

fn default_match(pot: &NumericalPotential, cfg: &SolverConfig) -> f64 {
    if let Some(x) = cfg.x_match {
        return x;
    }
    match &pot.tail {
        Tail::Compact { support } if *support > 0.0 => *support,
        Tail::Compact { .. } => 1.0,
        Tail::Exponential { rate, .. } => 1.0 / rate,
    }
}

/// Jost functions together with the matching-point drift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JostReport {
    pub pair: JostPair,
    pub x_match: f64,
    /// Relative change of `F+-` when matching at `1.5 x_match` instead.
    pub drift: f64,
    /// `|W[f+, f-] + 2ik| / |2k|` at the matching point.
    pub wronskian_error: f64,
}

fn jost_at(pot: &NumericalPotential, k: C64, nu: C64, x: f64, cfg: &SolverConfig) -> Result<(C64, C64, C64)> {
    let phi = integrate_regular(pot, k, nu, x, cfg)?;
    let j = integrate_jost(pot, k, x, cfg)?;
    Ok((wronskian(j.f_plus, phi), wronskian(j.f_minus, phi), j.wronskian()))
}

/// `F+- = W[f+-, phi]` with the matching-point check.
pub fn jost_report(pot: &NumericalPotential, k: C64, nu: C64, cfg: &SolverConfig) -> Result<JostReport> {
    let x = default_match(pot, cfg);
    let (fp, fm, w) = jost_at(pot, k, nu, x, cfg)?;
    let (fp2, fm2, _) = jost_at(pot, k, nu, 1.5 * x, cfg)?;
    let rel = |a: C64, b: C64| (a - b).norm() / a.norm().max(b.norm()).max(1e-300);
    let drift = rel(fp, fp2).max(rel(fm, fm2));
    if drift > cfg.drift_tol {
        return Err(Error::WronskianDrift { drift });
    }
    let pair = JostPair { f_plus: fp, f_minus: fm, convention: JostConvention::power_law(nu) };
    Ok(JostReport { pair, x_match: x, drift, wronskian_error: (w + 2.0 * I * k).norm() / (2.0 * k).norm() })
}

pub fn jost_functions(pot: &NumericalPotential, k: C64, nu: C64, cfg: &SolverConfig) -> Result<JostPair> {
    Ok(jost_report(pot, k, nu, cfg)?.pair)
}

/// `F+^r = W[f+(a), phi^r(a)]` with `phi^r = sin(k0 x)/k0`, `k0^2 = k^2 - V(a)`.
pub fn uv_cutoff_jost(pot: &NumericalPotential, a: f64, k: C64, cfg: &SolverConfig) -> Result<C64> {
    Ok(uv_cutoff_pair(pot, a, k, cfg)?.f_plus)
}

/// Both renormalized Jost functions under a UV cutoff at `a`.
pub fn uv_cutoff_pair(pot: &NumericalPotential, a: f64, k: C64, cfg: &SolverConfig) -> Result<JostPair> {
    CutoffSpec { uv_radius: Some(a), ir_radius: None }.validate()?;
    let j = integrate_jost(pot, k, a, cfg)?;
    let phi = regular_below_cutoff(pot.eval(a), k, a);
    Ok(JostPair {
        f_plus: wronskian(j.f_plus, phi),
        f_minus: wronskian(j.f_minus, phi),
        convention: JostConvention::dirichlet(),
    })
}

/// `(sin(k0 x)/k0, cos(k0 x))` in the constant region of a UV-cut potential.
pub fn regular_below_cutoff(v0: C64, k: C64, x: f64) -> State {
    let k0 = (k * k - v0).sqrt();
    if k0.norm() < 1e-12 {
        return [C64::new(x, 0.0), ONE];
    }
    [(k0 * x).sin() / k0, (k0 * x).cos()]
}

pub fn uv_cutoff_s(pot: &NumericalPotential, a: f64, k: C64, cfg: &SolverConfig) -> Result<C64> {
    uv_cutoff_pair(pot, a, k, cfg)?.s()
}

/// Jost functions of the potential truncated at `r`, matched at `r` where the plane waves are exact.
pub fn ir_cutoff_jost(pot: &NumericalPotential, r: f64, k: C64, nu: C64, cfg: &SolverConfig) -> Result<JostPair> {
    CutoffSpec { ir_radius: Some(r), uv_radius: None }.validate()?;
    cfg.check_k(k)?;
    let cut = pot.with_ir_cutoff(r);
    let phi = integrate_regular(&cut, k, nu, r, cfg)?;
    let e = (I * k * r).exp();
    let fp = [e, I * k * e];
    let fm = [ONE / e, -I * k / e];
    Ok(JostPair {
        f_plus: wronskian(fp, phi),
        f_minus: wronskian(fm, phi),
        convention: JostConvention::power_law(nu),
    })
}

pub fn ir_cutoff_s(pot: &NumericalPotential, r: f64, k: C64, nu: C64, cfg: &SolverConfig) -> Result<C64> {
    ir_cutoff_jost(pot, r, k, nu, cfg)?.s()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;
    use crate::models::{pt1_jost_plus, pt2_jost_plus};

    #[test]
    fn free_regular_solution_is_sine() {
        let k = c(1.1, 0.3);
        let phi = integrate_regular(&NumericalPotential::free(), k, c(0.5, 0.0), 2.0, &SolverConfig::default()).unwrap();
        let exact = (2.0 * k).sin() / k;
        assert!((phi[0] - exact).norm() < 1e-9 * exact.norm());
    }

    #[test]
    fn free_jost_pair() {
        let cfg = SolverConfig::default();
        let pair = jost_functions(&NumericalPotential::free(), c(0.9, 0.1), c(0.5, 0.0), &cfg).unwrap();
        assert!((pair.f_plus - 1.0).norm() < 1e-9);
        assert!((pair.f_minus - 1.0).norm() < 1e-9);
    }

    #[test]
    fn sinh_sq_matches_closed_form() {
        let cfg = SolverConfig::default();
        let nu = c(0.75, 0.0);
        let k = c(1.2, 0.0);
        let pair = jost_functions(&NumericalPotential::sinh_sq(nu), k, nu, &cfg).unwrap();
        let exact = pt1_jost_plus(k, nu).unwrap();
        assert!((pair.f_plus - exact).norm() < 1e-6 * exact.norm(), "{} vs {exact}", pair.f_plus);
    }

    #[test]
    fn cosh_sq_matches_closed_form() {
        let cfg = SolverConfig::default();
        let kappa = c(1.5, 0.0);
        let k = c(0.8, 0.0);
        let pair = jost_functions(&NumericalPotential::cosh_sq(kappa), k, c(0.5, 0.0), &cfg).unwrap();
        let exact = pt2_jost_plus(k, kappa).unwrap();
        assert!((pair.f_plus - exact).norm() < 1e-6 * exact.norm(), "{} vs {exact}", pair.f_plus);
    }

    #[test]
    fn asymptotic_seeding_agrees_with_series() {
        let nu = c(1.3, 0.0);
        let k = c(0.7, 0.2);
        let pot = NumericalPotential::sinh_sq(nu);
        let a = jost_functions(&pot, k, nu, &SolverConfig::default()).unwrap();
        let cfg = SolverConfig { tail_mode: TailMode::Asymptotic, ..SolverConfig::default() };
        let b = jost_functions(&pot, k, nu, &cfg).unwrap();
        assert!((a.f_plus - b.f_plus).norm() < 1e-6 * a.f_plus.norm());
    }

    #[test]
    fn cutoff_spec_validation() {
        assert!(CutoffSpec { ir_radius: Some(1.0), uv_radius: Some(2.0) }.validate().is_err());
        assert!(CutoffSpec { ir_radius: Some(3.0), uv_radius: Some(0.1) }.validate().is_ok());
    }
}
