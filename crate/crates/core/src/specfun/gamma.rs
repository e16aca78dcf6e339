use crate::complex::{nonpositive_integer, C64, I, ONE, ZERO};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Arguments within this distance of `0, -1, -2, ...` are treated as poles.
pub const POLE_TOL: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 15] = [
    1.0000000000000000074,
    676.52036812188353721,
    -1259.1392167222817739,
    771.32342877543770652,
    -176.61502914598978109,
    12.507343225028745327,
    -0.13857103233328224313,
    1.0091126294731372862e-5,
    -3.4345842252531046081e-7,
    8.3593378357125965382e-7,
    -8.5977556445396087554e-7,
    6.0464973384949281078e-7,
    -2.9113287278906137139e-7,
    8.5891293135682268559e-8,
    -1.1646065639867851529e-8,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_78;

fn lanczos_sum(zm1: C64) -> C64 {
    let mut s = C64::new(LANCZOS[0], 0.0);
    for (k, &ck) in LANCZOS.iter().enumerate().skip(1) {
        s += ck / (zm1 + k as f64);
    }
    s
}

/// `sin(pi z)`, exact zeros at the integers.
pub fn sin_pi(z: C64) -> C64 {
    let n = z.re.round();
    let r = C64::new(z.re - n, z.im);
    let s = (PI * r).sin();
    if (n as i64).rem_euclid(2) == 0 {
        s
    } else {
        -s
    }
}

/// A logarithm of `sin(pi z)` that stays finite for large `|Im z|`.
fn ln_sin_pi(z: C64) -> C64 {
    if z.im > 15.0 {
        // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) / (-2i)
        -I * PI * z - C64::new(2.0f64.ln(), -PI / 2.0) + (ONE - (2.0 * I * PI * z).exp()).ln()
    } else if z.im < -15.0 {
        I * PI * z - C64::new(2.0f64.ln(), PI / 2.0) + (ONE - (-2.0 * I * PI * z).exp()).ln()
    } else {
        sin_pi(z).ln()
    }
}

fn ln_gamma_right(z: C64) -> C64 {
    let zm1 = z - 1.0;
    let t = zm1 + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (zm1 + 0.5) * t.ln() - t + lanczos_sum(zm1).ln()
}

/// A branch of `ln Gamma(z)`; `exp(ln_gamma(z)) = Gamma(z)`.
pub fn ln_gamma(z: C64) -> Result<C64> {
    if let Some(n) = nonpositive_integer(z, POLE_TOL) {
        return Err(Error::PoleAtNonpositiveInteger(n));
    }
    if z.re < 0.5 {
        Ok(C64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(ONE - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}

/// Complex gamma function (Lanczos, g = 7, with reflection for `Re z < 1/2`).
pub fn gamma(z: C64) -> Result<C64> {
    if let Some(n) = nonpositive_integer(z, POLE_TOL) {
        return Err(Error::PoleAtNonpositiveInteger(n));
    }
    if z.im.abs() > 20.0 {
        return Ok(ln_gamma(z)?.exp());
    }
    if z.re < 0.5 {
        Ok(PI / (sin_pi(z) * gamma_right(ONE - z)))
    } else {
        Ok(gamma_right(z))
    }
}

fn gamma_right(z: C64) -> C64 {
    let zm1 = z - 1.0;
    let t = zm1 + LANCZOS_G + 0.5;
    let lead = ((zm1 + 0.5) * t.ln() - t).exp();
    (2.0 * PI).sqrt() * lead * lanczos_sum(zm1)
}

/// Reciprocal gamma `1/Gamma(z)`; entire, exactly zero at the poles of `Gamma`.
pub fn rgamma(z: C64) -> C64 {
    if nonpositive_integer(z, POLE_TOL).is_some() {
        return ZERO;
    }
    if z.im.abs() > 20.0 {
        return (-ln_gamma_right_or_reflect(z)).exp();
    }
    if z.re < 0.5 {
        sin_pi(z) * gamma_right(ONE - z) / PI
    } else {
        ONE / gamma_right(z)
    }
}

fn ln_gamma_right_or_reflect(z: C64) -> C64 {
    if z.re < 0.5 {
        C64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(ONE - z)
    } else {
        ln_gamma_right(z)
    }
}

/// How [`gamma_ratio_mode`] treats coinciding numerator and denominator poles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RatioMode {
    /// Equal pole counts are reported as [`Error::IndeterminateRatio`].
    #[default]
    Strict,
    /// Equal pole counts resolve to the limit in which all pole arguments
    /// approach their integers at the same rate.
    Limit,
}

/// `prod Gamma(num) / prod Gamma(den)` with pole bookkeeping.
///
/// Poles are counted with multiplicity: more numerator poles is an error,
/// more denominator poles gives an exact zero, and a tie is indeterminate.
pub fn gamma_ratio(num: &[C64], den: &[C64]) -> Result<C64> {
    gamma_ratio_mode(num, den, RatioMode::Strict)
}

pub fn gamma_ratio_mode(num: &[C64], den: &[C64], mode: RatioMode) -> Result<C64> {
    let mut log = ZERO;
    let mut num_poles = 0usize;
    let mut den_poles = 0usize;
    let mut first_num_pole = None;
    for &z in num {
        match nonpositive_integer(z, POLE_TOL) {
            Some(n) => {
                num_poles += 1;
                first_num_pole.get_or_insert(n);
                log += ln_residue(n);
            }
            None => log += ln_gamma(z)?,
        }
    }
    for &z in den {
        match nonpositive_integer(z, POLE_TOL) {
            Some(n) => {
                den_poles += 1;
                log -= ln_residue(n);
            }
            None => log -= ln_gamma(z)?,
        }
    }
    if num_poles > den_poles {
        return Err(Error::PoleAtNonpositiveInteger(first_num_pole.unwrap_or(0)));
    }
    if num_poles < den_poles {
        return Ok(ZERO);
    }
    if num_poles > 0 && mode == RatioMode::Strict {
        return Err(Error::IndeterminateRatio { poles: num_poles });
    }
    Ok(log.exp())
}

/// Log of the residue `(-1)^n / n!` of `Gamma` at `-n`.
fn ln_residue(n: u32) -> C64 {
    let ln_fact = ln_gamma_right(C64::new(n as f64 + 1.0, 0.0)).re;
    let phase = if n % 2 == 0 { 0.0 } else { PI };
    C64::new(-ln_fact, phase)
}
