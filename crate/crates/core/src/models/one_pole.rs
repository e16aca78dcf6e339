use super::{JostConvention, JostPair};
use crate::complex::{C64, I};
use crate::error::{Error, Result};

const ZERO_TOL: f64 = 1e-14;

/// `S(k) = -(k + ic)/(k - ic)`.
pub fn one_pole_s(k: C64, c: f64) -> Result<C64> {
    let num = -(k + I * c);
    let den = k - I * c;
    match (num.norm() <= ZERO_TOL, den.norm() <= ZERO_TOL) {
        (true, true) => Err(Error::IndeterminateRatio { poles: 1 }),
        (false, true) => Err(Error::PoleHit),
        _ => Ok(num / den),
    }
}

/// Jost pair realizing the one-pole S-matrix: `F+ = k - ic`, `F- = -(k + ic)`.
pub fn one_pole_jost(k: C64, c: f64) -> JostPair {
    JostPair {
        f_plus: k - I * c,
        f_minus: -(k + I * c),
        convention: JostConvention::dirichlet(),
    }
}
