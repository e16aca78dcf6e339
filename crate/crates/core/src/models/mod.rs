//! Closed-form Jost functions and S-matrices of the exactly solvable models,
//! their gamma-function ladders and pole-skipping catalogs.

mod catalog;
mod coulomb;
mod cosh_sq;
mod ladder;
mod one_pole;
mod sinh_sq;

pub use catalog::pole_skip_catalog;
pub(crate) use catalog::catalog_order;
pub use cosh_sq::{
    canonical_kappa, pt2_f_minus, pt2_f_minus_coefficient, pt2_f_plus, pt2_jost_minus, pt2_jost_plus, pt2_s,
};
pub use coulomb::{
    coulomb_jost, coulomb_jost_minus, coulomb_jost_plus, coulomb_kappa, coulomb_regular, coulomb_s, coulomb_s_kappa,
};
pub use ladder::{ladders, Affine, LadderKind, LadderSpec};
pub use one_pole::{one_pole_jost, one_pole_s};
pub use sinh_sq::{
    pt1_f_minus, pt1_f_minus_coefficient, pt1_f_plus, pt1_jost_minus, pt1_jost_plus, pt1_regular, pt1_s,
};

use crate::complex::{c, C64};
use crate::error::{Error, Result};
use crate::types::Axis;
use serde::{Deserialize, Serialize};

/// Normalization attached to a pair of Jost functions.
///
/// The regular solution behaves as `x^exponent` at the origin with unit
/// coefficient. When `log_phase` is set the Jost solutions carry the Coulomb
/// phase, `f+- ~ exp(+-i (k x - kappa_C ln x))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JostConvention {
    pub regular_exponent: C64,
    pub log_phase: Option<C64>,
}

impl JostConvention {
    pub fn power_law(nu: C64) -> Self {
        JostConvention { regular_exponent: 0.5 + nu, log_phase: None }
    }

    /// `phi(0) = 0`, `phi'(0) = 1`.
    pub fn dirichlet() -> Self {
        JostConvention { regular_exponent: c(1.0, 0.0), log_phase: None }
    }
}

/// `F+ = W[f+, phi]`, `F- = W[f-, phi]` with `W[f, g] = f g' - f' g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JostPair {
    pub f_plus: C64,
    pub f_minus: C64,
    pub convention: JostConvention,
}

impl JostPair {
    /// `S = F- / F+`.
    pub fn s(&self) -> Result<C64> {
        let tiny = 1e-300;
        match (self.f_plus.norm() < tiny, self.f_minus.norm() < tiny) {
            (true, true) => Err(Error::IndeterminateRatio { poles: 1 }),
            (true, false) => Err(Error::PoleHit),
            _ => Ok(self.f_minus / self.f_plus),
        }
    }
}

/// The four analytic models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum PotentialModel {
    /// `S = -(k + ic)/(k - ic)`.
    OnePole { c: f64 },
    /// `V = (nu^2 - 1/4)/x^2 + e^2/x`.
    Coulomb {
        #[serde(with = "crate::complex::serde_complex")]
        e2: C64,
        #[serde(with = "crate::complex::serde_complex")]
        nu: C64,
    },
    /// `V = (nu^2 - 1/4)/sinh^2 x`.
    SinhSq {
        #[serde(with = "crate::complex::serde_complex")]
        nu: C64,
    },
    /// `V = -kappa(kappa - 1)/cosh^2 x`, with `kappa` canonicalized to `Re kappa >= 1/2`.
    CoshSq {
        #[serde(with = "crate::complex::serde_complex")]
        kappa: C64,
    },
}

impl PotentialModel {
    pub fn one_pole(c: f64) -> Self {
        PotentialModel::OnePole { c }
    }

    pub fn coulomb(e2: C64, nu: C64) -> Self {
        PotentialModel::Coulomb { e2, nu }
    }

    pub fn sinh_sq(nu: C64) -> Self {
        PotentialModel::SinhSq { nu }
    }

    pub fn cosh_sq(kappa: C64) -> Self {
        PotentialModel::CoshSq { kappa: canonical_kappa(kappa) }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PotentialModel::OnePole { .. } => "one-pole",
            PotentialModel::Coulomb { .. } => "coulomb",
            PotentialModel::SinhSq { .. } => "sinh-sq",
            PotentialModel::CoshSq { .. } => "cosh-sq",
        }
    }

    /// Axis labels `(param, second)` of the pole-skipping plane.
    pub fn axes(&self) -> (Axis, Axis) {
        match self {
            PotentialModel::OnePole { .. } => (Axis::C, Axis::K),
            PotentialModel::Coulomb { .. } => (Axis::Nu, Axis::KappaC),
            PotentialModel::SinhSq { .. } => (Axis::Nu, Axis::K),
            PotentialModel::CoshSq { .. } => (Axis::Kappa, Axis::K),
        }
    }

    /// The scanned parameter of this model.
    pub fn param(&self) -> C64 {
        match *self {
            PotentialModel::OnePole { c } => C64::new(c, 0.0),
            PotentialModel::Coulomb { nu, .. } => nu,
            PotentialModel::SinhSq { nu } => nu,
            PotentialModel::CoshSq { kappa } => kappa,
        }
    }

    /// Same model with the scanned parameter replaced.
    pub fn with_param(&self, p: C64) -> Self {
        match *self {
            PotentialModel::OnePole { .. } => PotentialModel::OnePole { c: p.re },
            PotentialModel::Coulomb { e2, .. } => PotentialModel::Coulomb { e2, nu: p },
            PotentialModel::SinhSq { .. } => PotentialModel::SinhSq { nu: p },
            PotentialModel::CoshSq { .. } => PotentialModel::CoshSq { kappa: p },
        }
    }

    pub fn s_matrix(&self, k: C64) -> Result<C64> {
        match *self {
            PotentialModel::OnePole { c } => one_pole_s(k, c),
            PotentialModel::Coulomb { e2, nu } => coulomb_s(k, nu, e2),
            PotentialModel::SinhSq { nu } => pt1_s(k, nu),
            PotentialModel::CoshSq { kappa } => pt2_s(k, kappa),
        }
    }

    pub fn jost(&self, k: C64) -> Result<JostPair> {
        match *self {
            PotentialModel::OnePole { c } => Ok(one_pole_jost(k, c)),
            PotentialModel::Coulomb { e2, nu } => coulomb_jost(k, nu, e2),
            PotentialModel::SinhSq { nu } => Ok(JostPair {
                f_plus: pt1_jost_plus(k, nu)?,
                f_minus: pt1_jost_minus(k, nu)?,
                convention: JostConvention::power_law(nu),
            }),
            PotentialModel::CoshSq { kappa } => Ok(JostPair {
                f_plus: pt2_jost_plus(k, kappa)?,
                f_minus: pt2_jost_minus(k, kappa)?,
                convention: JostConvention::dirichlet(),
            }),
        }
    }

    /// The potential `V(x)`; the one-pole model has none.
    pub fn potential(&self, x: f64) -> Option<C64> {
        match *self {
            PotentialModel::OnePole { .. } => None,
            PotentialModel::Coulomb { e2, nu } => Some((nu * nu - 0.25) / (x * x) + e2 / x),
            PotentialModel::SinhSq { nu } => Some((nu * nu - 0.25) / x.sinh().powi(2)),
            PotentialModel::CoshSq { kappa } => Some(-kappa * (kappa - 1.0) / x.cosh().powi(2)),
        }
    }
}
