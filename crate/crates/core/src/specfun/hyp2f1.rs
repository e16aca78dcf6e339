use super::gamma::{gamma_ratio, POLE_TOL};
use crate::complex::{near_integer, nonpositive_integer, C64, ONE, ZERO};
use crate::error::{Error, Result};

const SERIES_RADIUS: f64 = 0.6;
const CONNECTION_RADIUS: f64 = 0.9;
const MAX_TERMS: usize = 200_000;
/// Largest parameter perturbation used when the connection formula degenerates.
pub const DEGENERATE_EPS: f64 = 1e-3;

/// Gauss hypergeometric function `2F1(a, b; c; z)`.
///
/// Maclaurin series for `|z| <= 0.6`, otherwise the `1 - z` connection formula
/// or the Pfaff transformation, whichever maps `z` closer to the origin.
/// Terminating series are summed directly.
pub fn hyp2f1(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    if nonpositive_integer(c, POLE_TOL).is_some() {
        return Err(Error::IllDefinedC { c });
    }
    if nonpositive_integer(a, POLE_TOL).is_some() || nonpositive_integer(b, POLE_TOL).is_some() {
        return hyp2f1_series(a, b, c, z);
    }
    if z == ONE {
        // Gauss summation, valid for Re(c - a - b) > 0.
        if (c - a - b).re > 0.0 {
            return gamma_ratio(&[c, c - a - b], &[c - a, c - b]);
        }
        return Err(Error::PoleHit);
    }
    let m0 = z.norm();
    if m0 <= SERIES_RADIUS {
        return hyp2f1_series(a, b, c, z);
    }
    let m1 = (ONE - z).norm();
    let zp = z / (z - 1.0);
    let m2 = zp.norm();
    if m1 <= m2 && m1 < CONNECTION_RADIUS {
        return match hyp2f1_connection(a, b, c, z) {
            Err(Error::ConnectionDegenerate { .. }) => {
                if m0 <= CONNECTION_RADIUS {
                    hyp2f1_series(a, b, c, z)
                } else {
                    degenerate_average(a, b, c, z)
                }
            }
            other => other,
        };
    }
    if m2 < m0 {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
        let inner = if m2 <= SERIES_RADIUS || m2 >= CONNECTION_RADIUS {
            hyp2f1_series(a, c - b, c, zp)?
        } else {
            hyp2f1(a, c - b, c, zp)?
        };
        return Ok((ONE - z).powc(-a) * inner);
    }
    hyp2f1_series(a, b, c, z)
}

/// Maclaurin series, valid for `|z| < 1` or terminating parameters.
pub fn hyp2f1_series(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    if nonpositive_integer(c, POLE_TOL).is_some() {
        return Err(Error::IllDefinedC { c });
    }
    let terminates = [a, b]
        .iter()
        .filter_map(|&p| nonpositive_integer(p, POLE_TOL))
        .min();
    let mut sum = ONE;
    let mut term = ONE;
    let mut quiet = 0;
    for n in 0..MAX_TERMS {
        if let Some(m) = terminates {
            if n as u32 >= m {
                return Ok(sum);
            }
        }
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.norm() <= 1e-17 * sum.norm() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    if terminates.is_none() && z.norm() >= 1.0 {
        return Err(Error::invalid("hypergeometric series diverges for |z| >= 1"));
    }
    Err(Error::NoConvergence { iterations: MAX_TERMS })
}

/// The `1 - z` connection formula evaluated as written.
///
/// Fails with [`Error::ConnectionDegenerate`] when `c - a - b` is an integer.
pub fn hyp2f1_connection(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    if nonpositive_integer(c, POLE_TOL).is_some() {
        return Err(Error::IllDefinedC { c });
    }
    let s = c - a - b;
    if let Some(n) = near_integer(s, 1e-10) {
        return Err(Error::ConnectionDegenerate { shift: n });
    }
    let w = ONE - z;
    let first = gamma_ratio(&[c, -s], &[a, b])?;
    let second = gamma_ratio(&[c, s], &[c - a, c - b])?;
    let mut total = ZERO;
    if first != ZERO {
        total += first * w.powc(s) * hyp2f1_series(c - a, c - b, ONE + s, w)?;
    }
    if second != ZERO {
        total += second * hyp2f1_series(a, b, ONE - s, w)?;
    }
    Ok(total)
}

/// Symmetric averages of the connection formula at `a +- eps` are even in `eps`;
/// three step sizes are Richardson-extrapolated to remove the `eps^2` and `eps^4` terms.
fn degenerate_average(a: C64, b: C64, c: C64, z: C64) -> Result<C64> {
    let sym = |eps: f64| -> Result<C64> {
        Ok(0.5 * (hyp2f1_connection(a + eps, b, c, z)? + hyp2f1_connection(a - eps, b, c, z)?))
    };
    let g1 = sym(DEGENERATE_EPS)?;
    let g2 = sym(DEGENERATE_EPS / 2.0)?;
    let g4 = sym(DEGENERATE_EPS / 4.0)?;
    let r1 = (4.0 * g2 - g1) / 3.0;
    let r2 = (4.0 * g4 - g2) / 3.0;
    Ok((16.0 * r2 - r1) / 15.0)
}
