use crate::complex::{C64, I, ONE};
use crate::error::{Error, Result};
use crate::specfun::{gamma_ratio, hyp2f1};
use std::f64::consts::{LN_2, PI};

const ZERO_TOL: f64 = 1e-12;

/// `kappa` and `1 - kappa` give the same potential; pick `Re kappa >= 1/2`.
pub fn canonical_kappa(kappa: C64) -> C64 {
    if kappa.re < 0.5 {
        ONE - kappa
    } else {
        kappa
    }
}

/// `F+ = f+(0) = 2^{ik} sqrt(pi) Gamma(1 - ik) / (Gamma((2 - ik - kappa)/2) Gamma((1 - ik + kappa)/2))`.
pub fn pt2_jost_plus(k: C64, kappa: C64) -> Result<C64> {
    let pre = (I * k * LN_2).exp() * PI.sqrt();
    Ok(pre * gamma_ratio(&[ONE - I * k], &[(2.0 - I * k - kappa) / 2.0, (1.0 - I * k + kappa) / 2.0])?)
}

/// `F-(k) = F+(-k)`.
pub fn pt2_jost_minus(k: C64, kappa: C64) -> Result<C64> {
    pt2_jost_plus(-k, kappa)
}

/// `S = 2^{-2ik} Gamma((2-ik-kappa)/2) Gamma((1-ik+kappa)/2) Gamma(1+ik)
///      / (Gamma((2+ik-kappa)/2) Gamma((1+ik+kappa)/2) Gamma(1-ik))`.
pub fn pt2_s(k: C64, kappa: C64) -> Result<C64> {
    let ik = I * k;
    let pre = (-2.0 * ik * LN_2).exp();
    let ratio = gamma_ratio(
        &[(2.0 - ik - kappa) / 2.0, (1.0 - ik + kappa) / 2.0, ONE + ik],
        &[(2.0 + ik - kappa) / 2.0, (1.0 + ik + kappa) / 2.0, ONE - ik],
    )?;
    Ok(pre * ratio)
}

/// `f+ = u^{-ik/2} (1-u)^{ik/2} 2F1(kappa, 1 - kappa; 1 - ik; u)` with `u = (1 - tanh x)/2`.
pub fn pt2_f_plus(k: C64, kappa: C64, x: f64) -> Result<C64> {
    let u = 0.5 * (1.0 - x.tanh());
    let f = hyp2f1(kappa, ONE - kappa, ONE - I * k, C64::new(u, 0.0))?;
    // u / (1 - u) = e^{-2x}
    Ok((I * k * x).exp() * f)
}

/// `f-(k) = f+(-k)`.
pub fn pt2_f_minus(k: C64, kappa: C64, x: f64) -> Result<C64> {
    pt2_f_plus(-k, kappa, x)
}

/// First correction in `f- = u^{ik/2} (1 + C u + ...)`:
/// `C = (k(ik + 1) + 2i kappa(kappa - 1)) / (2(k - i))`.
///
/// The `0/0` at `k = i`, `kappa in {0, 1}` is reported as [`Error::IndeterminateRatio`].
pub fn pt2_f_minus_coefficient(k: C64, kappa: C64) -> Result<C64> {
    let num = k * (I * k + 1.0) + 2.0 * I * kappa * (kappa - 1.0);
    let den = 2.0 * (k - I);
    match (num.norm() <= ZERO_TOL, den.norm() <= ZERO_TOL) {
        (true, true) => Err(Error::IndeterminateRatio { poles: 1 }),
        (false, true) => Err(Error::PoleHit),
        _ => Ok(num / den),
    }
}
