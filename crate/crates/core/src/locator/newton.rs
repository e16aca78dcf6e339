use crate::complex::{C64, ZERO};
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Complex Newton iteration in Schroeder's form `f f' / (f'^2 - f f'')`, which
/// stays quadratic at multiple roots. Derivatives are central differences
/// on a step tied to the previous update.
pub fn newton_1d<F>(f: F, seed: C64, tol: f64, max_iter: usize) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    let mut z = seed;
    let mut h = 1e-4 * (1.0 + z.norm());
    for _ in 0..max_iter {
        let f0 = f(z)?;
        if f0 == ZERO {
            return Ok(z);
        }
        let fp = f(z + h)?;
        let fm = f(z - h)?;
        let d1 = (fp - fm) / (2.0 * h);
        let d2 = (fp - 2.0 * f0 + fm) / (h * h);
        let den = d1 * d1 - f0 * d2;
        let step = if den == ZERO || !den.is_finite() {
            if d1 == ZERO {
                return Err(Error::NoConvergence { iterations: max_iter });
            }
            f0 / d1
        } else {
            f0 * d1 / den
        };
        let size = step.norm();
        if !size.is_finite() {
            return Err(Error::NoConvergence { iterations: max_iter });
        }
        let step = if size > 1.0 { step / size } else { step };
        z -= step;
        if size <= tol * (1.0 + z.norm()) {
            return Ok(z);
        }
        h = (1e-3 * size).clamp(1e-13 * (1.0 + z.norm()), 1e-4 * (1.0 + z.norm()));
    }
    Err(Error::NoConvergence { iterations: max_iter })
}

const MIN_MODULUS: f64 = 1e-13;

/// Winding number of `f` around the circle `|z - center| = radius`: zeros minus poles inside.
///
/// The contour is refined until consecutive phase increments stay below `pi/4`.
pub fn winding_number<F>(f: F, center: C64, radius: f64) -> Result<i32>
where
    F: Fn(C64) -> Result<C64>,
{
    let mut n = 64usize;
    'refine: loop {
        let mut total = 0.0;
        let mut prev: Option<C64> = None;
        let mut first = ZERO;
        for j in 0..=n {
            let th = 2.0 * PI * j as f64 / n as f64;
            let z = center + C64::from_polar(radius, th);
            let v = if j == n { first } else { f(z)? };
            if j == 0 {
                first = v;
            }
            if v.norm() < MIN_MODULUS || !v.is_finite() {
                return Err(Error::AmbiguousWinding { min_modulus: v.norm() });
            }
            if let Some(p) = prev {
                let dphi = (v / p).arg();
                if dphi.abs() > PI / 4.0 {
                    if n >= 1 << 14 {
                        return Err(Error::AmbiguousWinding { min_modulus: v.norm() });
                    }
                    n *= 4;
                    continue 'refine;
                }
                total += dphi;
            }
            prev = Some(v);
        }
        return Ok((total / (2.0 * PI)).round() as i32);
    }
}
