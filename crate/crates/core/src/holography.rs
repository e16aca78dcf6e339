//! Near-horizon map from a black-hole metric function to a half-line
//! Schroedinger problem in `x = r - 1`.

use crate::complex::{C64, I};
use crate::error::{Error, Result};
use crate::frobenius::{det_truncation, SeriesPotential};
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

const HORIZON_TOL: f64 = 1e-12;
const TEMPERATURE_TOL: f64 = 1e-10;
const HORIZON_STEP: f64 = 1e-3;

/// Fit window for the `x^-2` coefficient of `U`.
pub const FIT_RANGE: (f64, f64) = (1e-6, 1e-3);
const FIT_POINTS: usize = 40;
const FIT_DEGREE: usize = 3;

/// Metric function `F(r)` with a simple horizon at `r = 1`.
#[derive(Clone)]
pub struct MetricModel {
    f: RealFn,
    pub temperature: f64,
    pub mass2: f64,
    v_extra: Option<RealFn>,
}

impl fmt::Debug for MetricModel {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.debug_struct("MetricModel")
            .field("temperature", &self.temperature)
            .field("mass2", &self.mass2)
            .field("v_extra", &self.v_extra.is_some())
            .finish()
    }
}

fn d1(f: &dyn Fn(f64) -> f64, r: f64, h: f64) -> f64 {
    (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h)
}

fn d2(f: &dyn Fn(f64) -> f64, r: f64, h: f64) -> f64 {
    (-f(r - 2.0 * h) + 16.0 * f(r - h) - 30.0 * f(r) + 16.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h * h)
}

impl MetricModel {
    /// Checks `F(1) = 0` and `F'(1) = 4 pi T`.
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static, temperature: f64, mass2: f64) -> Result<Self> {
        let f: RealFn = Arc::new(f);
        let f0 = f(1.0);
        if !(f0.abs() <= HORIZON_TOL) {
            return Err(Error::invalid(format!("F(1) = {f0:e}, the horizon must sit at r = 1")));
        }
        let slope = d1(&*f, 1.0, HORIZON_STEP);
        if slope.abs() <= TEMPERATURE_TOL {
            return Err(Error::HorizonDegeneracy);
        }
        let expected = 4.0 * PI * temperature;
        if !((slope - expected).abs() <= TEMPERATURE_TOL * expected.abs().max(1.0)) {
            return Err(Error::invalid(format!("F'(1) = {slope} differs from 4 pi T = {expected}")));
        }
        Ok(MetricModel { f, temperature, mass2, v_extra: None })
    }

    /// `F = 2 pi T (r^2 - 1)`.
    pub fn btz_like(temperature: f64, mass2: f64) -> Result<Self> {
        Self::new(move |r| 2.0 * PI * temperature * (r * r - 1.0), temperature, mass2)
    }

    /// `F = 4 pi T (r - 1)`.
    pub fn rindler(temperature: f64, mass2: f64) -> Result<Self> {
        Self::new(move |r| 4.0 * PI * temperature * (r - 1.0), temperature, mass2)
    }

    /// Named preset: `btz-like` or `rindler`.
    pub fn preset(name: &str, temperature: f64, mass2: f64) -> Result<Self> {
        match name {
            "btz-like" | "btz" => Self::btz_like(temperature, mass2),
            "rindler" => Self::rindler(temperature, mass2),
            other => Err(Error::invalid(format!("unknown metric preset '{other}'"))),
        }
    }

    /// Adds the caller-supplied potential terms: `V = F (m^2 + V_extra(r))`.
    pub fn with_v_extra(mut self, v: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.v_extra = Some(Arc::new(v));
        self
    }

    pub fn f(&self, r: f64) -> f64 {
        (self.f)(r)
    }

    /// `V(r) = F (m^2 + V_extra)`.
    pub fn v(&self, r: f64) -> f64 {
        let extra = self.v_extra.as_ref().map_or(0.0, |v| v(r));
        self.f(r) * (self.mass2 + extra)
    }

    /// `nu = -i omega / (4 pi T)`.
    pub fn nu(&self, omega: C64) -> C64 {
        -I * omega / (4.0 * PI * self.temperature)
    }
}

/// `-psi'' + U psi = 0` on `x = r - 1 > 0`.
#[derive(Debug, Clone)]
pub struct EffectiveProblem {
    pub metric: MetricModel,
    pub omega: C64,
    pub nu: C64,
}

impl EffectiveProblem {
    /// `U = (V - omega^2)/F^2 + F'' / (2F) - F'^2 / (4F^2)`, derivatives by
    /// fourth-order central differences on the step `min(1e-3, x/4)`.
    pub fn u(&self, x: f64) -> C64 {
        let r = 1.0 + x;
        let h = (x / 4.0).min(1e-3);
        let f = |r: f64| self.metric.f(r);
        let f0 = f(r);
        let fp = d1(&f, r, h);
        let fpp = d2(&f, r, h);
        (self.metric.v(r) - self.omega * self.omega) / (f0 * f0) + fpp / (2.0 * f0) - fp * fp / (4.0 * f0 * f0)
    }

    /// The `x -> 0` exponent `1/2 + nu` of the incoming solution.
    pub fn incoming_exponent(&self) -> C64 {
        incoming_condition(self)
    }

    /// Fit of `x^2 U = c_0 + c_1 x + c_2 x^2 + c_3 x^3` on log-spaced points in [`FIT_RANGE`].
    pub fn near_horizon_fit(&self) -> Result<NearHorizonFit> {
        let (lo, hi) = FIT_RANGE;
        let xs: Vec<f64> = (0..FIT_POINTS)
            .map(|j| lo * (hi / lo).powf(j as f64 / (FIT_POINTS - 1) as f64))
            .collect();
        let cols = FIT_DEGREE + 1;
        // columns in t = x / hi keep the design matrix well conditioned
        let a = DMatrix::from_fn(FIT_POINTS, cols, |i, j| C64::new((xs[i] / hi).powi(j as i32), 0.0));
        let b = DVector::from_iterator(FIT_POINTS, xs.iter().map(|&x| x * x * self.u(x)));
        let svd = a.clone().svd(true, true);
        let sol = svd.solve(&b, 1e-14).map_err(|e| Error::invalid(e.to_string()))?;
        // the F'^2 / (4 F^2) piece of x^2 U is 1/4 near the horizon, so it sets the scale when the sum cancels
        let residual = (&a * &sol - &b).camax() / b.camax().max(0.25);
        let coefficients = (0..cols).map(|j| sol[j] / hi.powi(j as i32)).collect();
        Ok(NearHorizonFit { coefficients, residual })
    }
}

/// Near-horizon expansion `x^2 U = sum_j c_j x^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct NearHorizonFit {
    pub coefficients: Vec<C64>,
    pub residual: f64,
}

impl NearHorizonFit {
    /// Coefficient of `x^-2` in `U`.
    pub fn leading(&self) -> C64 {
        self.coefficients[0]
    }

    /// Centrifugal index from the leading coefficient, on the branch nearest `hint`.
    pub fn nu_near(&self, hint: C64) -> C64 {
        let r = (self.leading() + 0.25).sqrt();
        if (r - hint).norm() <= (-r - hint).norm() {
            r
        } else {
            -r
        }
    }

    /// The fitted expansion as a series potential at centrifugal index `nu` and `k = 0`.
    pub fn series(&self, nu: C64) -> SeriesPotential<C64> {
        SeriesPotential::new(nu, C64::new(0.0, 0.0), self.coefficients[1..].to_vec())
    }
}

pub fn effective_potential(metric: &MetricModel, omega: C64) -> Result<EffectiveProblem> {
    if !omega.is_finite() {
        return Err(Error::invalid("omega must be finite"));
    }
    Ok(EffectiveProblem { metric: metric.clone(), omega, nu: metric.nu(omega) })
}

/// Fitted `x^-2` coefficient of `U`.
pub fn leading_coefficient(problem: &EffectiveProblem) -> Result<C64> {
    Ok(problem.near_horizon_fit()?.leading())
}

/// `omega = -2 pi T n i` and `nu = -n/2`.
pub fn matsubara_dictionary(n: i64, temperature: f64) -> Result<(C64, C64)> {
    if n < 1 {
        return Err(Error::invalid("Matsubara index must be at least 1"));
    }
    if !(temperature > 0.0) {
        return Err(Error::invalid("temperature must be positive"));
    }
    let omega = C64::new(0.0, -2.0 * PI * temperature * n as f64);
    Ok((omega, C64::new(-(n as f64) / 2.0, 0.0)))
}

/// The exponent `1/2 + nu` of `psi ~ x^{1/2 + nu}`.
pub fn incoming_condition(problem: &EffectiveProblem) -> C64 {
    0.5 + problem.nu
}

/// Series data of the effective problem at the `n`-th Matsubara frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct MatsubaraCheck {
    pub n: i64,
    pub omega: C64,
    pub nu: C64,
    /// Centrifugal index recovered from the fitted `x^-2` coefficient.
    pub fitted_nu: C64,
    /// Recursion pivot `-n (n + 2 nu)` at the fitted index.
    pub pivot: C64,
    /// `det M^(n)` of the fitted series expansion.
    pub det: C64,
}

/// Fits the `n`-th Matsubara problem and evaluates the Frobenius criterion on its expansion.
pub fn matsubara_check(metric: &MetricModel, n: i64) -> Result<MatsubaraCheck> {
    let (omega, nu) = matsubara_dictionary(n, metric.temperature)?;
    let fit = effective_potential(metric, omega)?.near_horizon_fit()?;
    let fitted_nu = fit.nu_near(nu);
    let m = n as f64;
    let pivot = -m * (m + 2.0 * fitted_nu);
    let det = det_truncation(&fit.series(fitted_nu), n as usize)?;
    Ok(MatsubaraCheck { n, omega, nu, fitted_nu, pivot, det })
}
