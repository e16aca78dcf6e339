use crate::complex::{C64, I, ONE};
use crate::error::{Error, Result};
use crate::specfun::{gamma_ratio, hyp2f1};
use std::f64::consts::PI;

const ZERO_TOL: f64 = 1e-12;

/// `F+ = 2^{nu+1/2} / sqrt(pi) * Gamma(1 + nu) Gamma(1 - ik) / Gamma(nu + 1/2 - ik)`.
pub fn pt1_jost_plus(k: C64, nu: C64) -> Result<C64> {
    let pre = (nu + 0.5).expf(2.0) / PI.sqrt();
    Ok(pre * gamma_ratio(&[ONE + nu, ONE - I * k], &[nu + 0.5 - I * k])?)
}

/// `F-(k) = F+(-k)`.
pub fn pt1_jost_minus(k: C64, nu: C64) -> Result<C64> {
    pt1_jost_plus(-k, nu)
}

/// `S = -Gamma(nu + 1/2 - ik) Gamma(ik) / (Gamma(nu + 1/2 + ik) Gamma(-ik))`.
pub fn pt1_s(k: C64, nu: C64) -> Result<C64> {
    Ok(-gamma_ratio(&[nu + 0.5 - I * k, I * k], &[nu + 0.5 + I * k, -I * k])?)
}

/// `f- = (1 - w)^{1/2 - nu} e^{-ikx} 2F1(1/2 - nu, 1/2 - nu + ik; 1 + ik; w)` with `w = e^{-2x}`.
pub fn pt1_f_minus(k: C64, nu: C64, x: f64) -> Result<C64> {
    let w = C64::new((-2.0 * x).exp(), 0.0);
    let a = 0.5 - nu;
    let f = hyp2f1(a, a + I * k, ONE + I * k, w)?;
    Ok((ONE - w).powc(a) * (-I * k * x).exp() * f)
}

/// `f+(k) = f-(-k)`.
pub fn pt1_f_plus(k: C64, nu: C64, x: f64) -> Result<C64> {
    pt1_f_minus(-k, nu, x)
}

/// Regular solution normalized to `x^{nu + 1/2}` at the origin:
/// `cosh(x)^{ik} tanh(x)^{nu + 1/2} 2F1(1/4 - ik/2 + nu/2, 3/4 - ik/2 + nu/2; 1 + nu; tanh^2 x)`.
pub fn pt1_regular(k: C64, nu: C64, x: f64) -> Result<C64> {
    let u = x.tanh();
    let a = 0.25 - 0.5 * I * k + 0.5 * nu;
    let f = hyp2f1(a, a + 0.5, ONE + nu, C64::new(u * u, 0.0))?;
    Ok((I * k * x.cosh().ln()).exp() * C64::new(u, 0.0).powc(nu + 0.5) * f)
}

/// First correction in `f- = e^{-ikx} (1 + C w + ...)`: `C = -i(4nu^2 - 1) / (4(k - i))`.
///
/// The `0/0` at `k = i`, `nu = +-1/2` is reported as [`Error::IndeterminateRatio`].
pub fn pt1_f_minus_coefficient(k: C64, nu: C64) -> Result<C64> {
    let num = -I * (4.0 * nu * nu - 1.0);
    let den = 4.0 * (k - I);
    match (num.norm() <= ZERO_TOL, den.norm() <= ZERO_TOL) {
        (true, true) => Err(Error::IndeterminateRatio { poles: 1 }),
        (false, true) => Err(Error::PoleHit),
        _ => Ok(num / den),
    }
}
