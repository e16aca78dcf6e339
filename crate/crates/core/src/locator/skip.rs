use crate::complex::{nonpositive_integer, C64, I, ONE};
use crate::error::{Error, Result};
use crate::models::{
    coulomb_jost_minus, coulomb_jost_plus, ladders, pt1_jost_minus, pt1_jost_plus, pt2_jost_minus, pt2_jost_plus,
    LadderKind, PotentialModel,
};
use crate::specfun::rgamma;
use crate::types::{Axis, LadderFamily};
use std::f64::consts::{LN_2, PI};

/// A two-argument S-matrix `S(param, k) = N / D` with entire `N` and `D`.
///
/// Pole-skipping points are the simultaneous zeros of `N` and `D`.
pub trait SkipFunction: Sync {
    fn axes(&self) -> (Axis, Axis);

    /// `(N, D)`.
    fn parts(&self, p: C64, k: C64) -> Result<(C64, C64)>;

    fn s(&self, p: C64, k: C64) -> Result<C64> {
        let (n, d) = self.parts(p, k)?;
        if d.norm() == 0.0 {
            return Err(if n.norm() == 0.0 { Error::IndeterminateRatio { poles: 1 } } else { Error::PoleHit });
        }
        Ok(n / d)
    }

    /// `(F+, F-)`; used for classification.
    fn jost(&self, _p: C64, _k: C64) -> Result<(C64, C64)> {
        Err(Error::invalid("this S-matrix carries no Jost functions"))
    }

    /// Momentum that decides bound versus antibound for a pole at `(p, k)`.
    fn pole_momentum(&self, _p: C64, k: C64) -> C64 {
        k
    }

    /// Ladder families whose gamma poles produce the pole and the zero at `(p, k)`.
    fn families(&self, _p: C64, _k: C64) -> (Option<LadderFamily>, Option<LadderFamily>) {
        (None, None)
    }
}

/// A closure-defined `(N, D)`, e.g. `(F-, F+)` from the numerical solver or a synthetic form.
pub struct FnSkip<F> {
    axes: (Axis, Axis),
    parts: F,
}

impl<F> FnSkip<F>
where
    F: Fn(C64, C64) -> Result<(C64, C64)> + Sync,
{
    pub fn new(axes: (Axis, Axis), parts: F) -> Self {
        FnSkip { axes, parts }
    }
}

impl<F> SkipFunction for FnSkip<F>
where
    F: Fn(C64, C64) -> Result<(C64, C64)> + Sync,
{
    fn axes(&self) -> (Axis, Axis) {
        self.axes
    }

    fn parts(&self, p: C64, k: C64) -> Result<(C64, C64)> {
        (self.parts)(p, k)
    }
}

/// Closed-form S-matrix of an analytic model in its pole-skipping plane.
///
/// Coulomb is taken in the `(nu, kappa_C)` plane at the fixed momentum
/// `k_ref`; its bound/antibound label uses `k = e^2 / (2 kappa_C)` at the
/// model's coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelSkip {
    pub model: PotentialModel,
    pub k_ref: C64,
}

impl ModelSkip {
    pub fn new(model: PotentialModel) -> Self {
        ModelSkip { model, k_ref: ONE }
    }

    pub fn with_k_ref(mut self, k_ref: C64) -> Self {
        self.k_ref = k_ref;
        self
    }
}

/// `N` and `D` with all common gamma factors removed:
/// one-pole `-(k + ic) / (k - ic)`,
/// sinh `1/G(nu+1/2+ik) 1/G(1-ik)` over `1/G(nu+1/2-ik) 1/G(1+ik)`,
/// cosh `2^{-2ik} 1/G((2+ik-kappa)/2) 1/G((1+ik+kappa)/2) 1/G(1-ik)` over the `k -> -k` image,
/// Coulomb `e^{-i pi(nu-1/2)} (2k)^{-2i kappa} 1/G(nu+1/2-i kappa)` over `1/G(nu+1/2+i kappa)`.
impl SkipFunction for ModelSkip {
    fn axes(&self) -> (Axis, Axis) {
        self.model.axes()
    }

    fn parts(&self, p: C64, k: C64) -> Result<(C64, C64)> {
        Ok(match self.model {
            PotentialModel::OnePole { .. } => (-(k + I * p), k - I * p),
            PotentialModel::SinhSq { .. } => {
                let h = p + 0.5;
                (rgamma(h + I * k) * rgamma(ONE - I * k), rgamma(h - I * k) * rgamma(ONE + I * k))
            }
            PotentialModel::CoshSq { .. } => {
                let ik = I * k;
                let pre = (-2.0 * ik * LN_2).exp();
                let n = pre * rgamma((2.0 + ik - p) / 2.0) * rgamma((1.0 + ik + p) / 2.0) * rgamma(ONE - ik);
                let d = rgamma((2.0 - ik - p) / 2.0) * rgamma((1.0 - ik + p) / 2.0) * rgamma(ONE + ik);
                (n, d)
            }
            PotentialModel::Coulomb { .. } => {
                if self.k_ref.norm() == 0.0 {
                    return Err(Error::BranchPointAtZeroK);
                }
                let h = p + 0.5;
                let phase = (-I * PI * (p - 0.5)).exp() * (-2.0 * I * k * (2.0 * self.k_ref).ln()).exp();
                (phase * rgamma(h - I * k), rgamma(h + I * k))
            }
        })
    }

    fn jost(&self, p: C64, k: C64) -> Result<(C64, C64)> {
        match self.model {
            PotentialModel::OnePole { .. } => Ok((k - I * p, -(k + I * p))),
            PotentialModel::SinhSq { .. } => Ok((pt1_jost_plus(k, p)?, pt1_jost_minus(k, p)?)),
            PotentialModel::CoshSq { .. } => Ok((pt2_jost_plus(k, p)?, pt2_jost_minus(k, p)?)),
            PotentialModel::Coulomb { .. } => {
                let e2 = 2.0 * self.k_ref * k;
                Ok((coulomb_jost_plus(self.k_ref, p, e2)?, coulomb_jost_minus(self.k_ref, p, e2)?))
            }
        }
    }

    fn pole_momentum(&self, _p: C64, k: C64) -> C64 {
        match self.model {
            PotentialModel::Coulomb { e2, .. } => {
                if k.norm() < 1e-12 {
                    C64::new(0.0, 0.0)
                } else {
                    e2 / (2.0 * k)
                }
            }
            _ => k,
        }
    }

    fn families(&self, p: C64, k: C64) -> (Option<LadderFamily>, Option<LadderFamily>) {
        if let PotentialModel::OnePole { .. } = self.model {
            let pole = ((k - I * p).norm() < 1e-8).then_some(LadderFamily::SimplePole);
            let zero = ((k + I * p).norm() < 1e-8).then_some(LadderFamily::SimpleZero);
            return (pole, zero);
        }
        let Ok(specs) = ladders(&self.model.with_param(p)) else {
            return (None, None);
        };
        let hit = |kind: LadderKind| {
            specs
                .iter()
                .filter(|s| s.kind == kind)
                .find(|s| nonpositive_integer(s.gamma_argument.eval(k), 1e-6).is_some())
                .map(|s| s.family)
        };
        (hit(LadderKind::Pole), hit(LadderKind::Zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;

    #[test]
    fn parts_reproduce_s() {
        let k = c(0.7, 0.3);
        for (m, p) in [
            (PotentialModel::sinh_sq(c(1.2, 0.1)), c(1.2, 0.1)),
            (PotentialModel::cosh_sq(c(1.6, -0.2)), c(1.6, -0.2)),
            (PotentialModel::one_pole(0.4), c(0.4, 0.0)),
        ] {
            let f = ModelSkip::new(m);
            let s = f.s(p, k).unwrap();
            let e = m.s_matrix(k).unwrap();
            assert!((s - e).norm() < 1e-12 * e.norm(), "{}", m.name());
        }
        let f = ModelSkip::new(PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0))).with_k_ref(c(0.9, 0.1));
        let (nu, kappa) = (c(0.4, 0.2), c(0.3, -0.1));
        let e = crate::models::coulomb_s_kappa(c(0.9, 0.1), nu, kappa).unwrap();
        assert!((f.s(nu, kappa).unwrap() - e).norm() < 1e-12 * e.norm());
    }
}
