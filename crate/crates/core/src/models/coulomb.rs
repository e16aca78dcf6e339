use super::{JostConvention, JostPair};
use crate::complex::{BranchConvention, C64, I, ZERO};
use crate::error::{Error, Result};
use crate::specfun::{gamma_ratio, whittaker_m_with_derivative};
use std::f64::consts::PI;

/// `kappa_C = e^2 / (2k)`.
pub fn coulomb_kappa(k: C64, e2: C64) -> Result<C64> {
    if k == ZERO {
        return Err(Error::BranchPointAtZeroK);
    }
    Ok(e2 / (2.0 * k))
}

/// `ln(2 e^{s i pi/2} k) = ln|2k| + i(arg k + s pi/2)` with the principal `arg k`.
fn phase_log(k: C64, sign: f64) -> C64 {
    C64::new((2.0 * k.norm()).ln(), k.arg() + sign * PI / 2.0)
}

/// `F+ = (2 e^{-i pi/2} k)^{1/2 - nu + i kappa} Gamma(2nu + 1) / Gamma(nu + 1/2 + i kappa)`.
pub fn coulomb_jost_plus(k: C64, nu: C64, e2: C64) -> Result<C64> {
    let kappa = coulomb_kappa(k, e2)?;
    let ratio = gamma_ratio(&[2.0 * nu + 1.0], &[nu + 0.5 + I * kappa])?;
    Ok(((0.5 - nu + I * kappa) * phase_log(k, -1.0)).exp() * ratio)
}

/// `F- = (2 e^{i pi/2} k)^{1/2 - nu - i kappa} Gamma(2nu + 1) / Gamma(nu + 1/2 - i kappa)`.
pub fn coulomb_jost_minus(k: C64, nu: C64, e2: C64) -> Result<C64> {
    let kappa = coulomb_kappa(k, e2)?;
    let ratio = gamma_ratio(&[2.0 * nu + 1.0], &[nu + 0.5 - I * kappa])?;
    Ok(((0.5 - nu - I * kappa) * phase_log(k, 1.0)).exp() * ratio)
}

pub fn coulomb_jost(k: C64, nu: C64, e2: C64) -> Result<JostPair> {
    Ok(JostPair {
        f_plus: coulomb_jost_plus(k, nu, e2)?,
        f_minus: coulomb_jost_minus(k, nu, e2)?,
        convention: JostConvention {
            regular_exponent: 0.5 + nu,
            log_phase: Some(coulomb_kappa(k, e2)?),
        },
    })
}

/// `S = e^{-i pi (nu - 1/2)} (2k)^{-2i kappa} Gamma(nu + 1/2 + i kappa) / Gamma(nu + 1/2 - i kappa)`.
pub fn coulomb_s(k: C64, nu: C64, e2: C64) -> Result<C64> {
    let kappa = coulomb_kappa(k, e2)?;
    coulomb_s_kappa(k, nu, kappa)
}

/// The Coulomb S-matrix as a function of `(nu, kappa_C)` at fixed `k`.
pub fn coulomb_s_kappa(k: C64, nu: C64, kappa: C64) -> Result<C64> {
    if k == ZERO {
        return Err(Error::BranchPointAtZeroK);
    }
    let ratio = gamma_ratio(&[nu + 0.5 + I * kappa], &[nu + 0.5 - I * kappa])?;
    let phase = (-I * PI * (nu - 0.5)).exp();
    Ok(phase * (-2.0 * I * kappa * (2.0 * k).ln()).exp() * ratio)
}

/// Regular solution `phi = (2ik)^{-(nu+1/2)} M_{i kappa, nu}(2ikx)`, normalized to `x^{nu+1/2}`.
pub fn coulomb_regular(k: C64, nu: C64, e2: C64, x: f64) -> Result<C64> {
    let kappa = coulomb_kappa(k, e2)?;
    let z = 2.0 * I * k;
    let branch = BranchConvention::WHITTAKER;
    let m = whittaker_m_with_derivative(I * kappa, nu, z * x, branch)?.0;
    Ok(branch.pow(z, -(nu + 0.5)) * m)
}
