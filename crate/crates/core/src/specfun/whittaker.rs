use super::gamma::POLE_TOL;
use crate::complex::{nonpositive_integer, BranchConvention, C64, ONE, ZERO};
use crate::error::{Error, Result};

/// Beyond this modulus the Kummer series is replaced by Taylor continuation of the ODE.
const SERIES_LIMIT: f64 = 8.0;
/// Starting modulus for the continuation.
const CONTINUATION_START: f64 = 6.0;
const MAX_TERMS: usize = 10_000;

/// Whittaker `M_{kappa,mu}(zeta) = e^{-zeta/2} zeta^{1/2+mu} 1F1(1/2+mu-kappa; 1+2mu; zeta)`.
///
/// Uses the principal branch of `zeta^{1/2+mu}`.
pub fn whittaker_m(kappa: C64, mu: C64, zeta: C64) -> Result<C64> {
    Ok(whittaker_m_with_derivative(kappa, mu, zeta, BranchConvention::PRINCIPAL)?.0)
}

/// `M_{kappa,mu}(zeta)` and its derivative in `zeta`, with an explicit branch for the power.
pub fn whittaker_m_with_derivative(
    kappa: C64,
    mu: C64,
    zeta: C64,
    branch: BranchConvention,
) -> Result<(C64, C64)> {
    let b = ONE + 2.0 * mu;
    if nonpositive_integer(b, POLE_TOL).is_some() {
        return Err(Error::IllDefinedOrder { two_mu: 2.0 * mu });
    }
    if zeta == ZERO {
        return Err(Error::invalid("Whittaker M is evaluated at zeta = 0"));
    }
    let r = zeta.norm();
    if r <= SERIES_LIMIT {
        return series(kappa, mu, zeta, branch);
    }
    let start = zeta * (CONTINUATION_START / r);
    let (w0, d0) = series(kappa, mu, start, branch)?;
    continue_along_ray(kappa, mu, start, zeta, w0, d0)
}

fn series(kappa: C64, mu: C64, zeta: C64, branch: BranchConvention) -> Result<(C64, C64)> {
    let a = 0.5 + mu - kappa;
    let b = ONE + 2.0 * mu;
    // 1F1 and its derivative
    let mut m = ONE;
    let mut dm = ZERO;
    let mut term = ONE;
    let mut quiet = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        // derivative term uses the current term before the update: d/dz z^{n+1} = (n+1) z^n
        let next = term * (a + nf) / ((b + nf) * (nf + 1.0));
        dm += next * (nf + 1.0);
        term = next * zeta;
        m += term;
        let dterm = next * (nf + 1.0);
        if term.norm() <= 1e-17 * m.norm() && dterm.norm() <= 1e-17 * dm.norm().max(1e-300) {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        if n + 1 == MAX_TERMS {
            return Err(Error::NoConvergence { iterations: MAX_TERMS });
        }
    }
    let pre = (-zeta / 2.0).exp() * branch.pow(zeta, 0.5 + mu);
    let value = pre * m;
    let deriv = pre * ((-0.5 + (0.5 + mu) / zeta) * m + dm);
    Ok((value, deriv))
}

/// Taylor-series continuation of `w'' = (1/4 - kappa/z + (mu^2 - 1/4)/z^2) w` along a ray.
fn continue_along_ray(
    kappa: C64,
    mu: C64,
    from: C64,
    to: C64,
    mut w: C64,
    mut dw: C64,
) -> Result<(C64, C64)> {
    let q = mu * mu - 0.25;
    let mut c = from;
    loop {
        let remaining = to - c;
        if remaining.norm() <= 1e-15 * to.norm() {
            return Ok((w, dw));
        }
        let max_step = (0.5 * c.norm()).min(2.0);
        let h = if remaining.norm() <= max_step {
            remaining
        } else {
            remaining * (max_step / remaining.norm())
        };
        let (nw, ndw) = taylor_step(kappa, q, c, h, w, dw)?;
        w = nw;
        dw = ndw;
        c += h;
    }
}

fn taylor_step(kappa: C64, q: C64, c: C64, h: C64, w: C64, dw: C64) -> Result<(C64, C64)> {
    // (c+t)^2 w'' = ((c+t)^2/4 - kappa (c+t) + q) w, expanded in t = z - c
    let c2 = c * c;
    let r0 = c2 / 4.0 - kappa * c + q;
    let r1 = c / 2.0 - kappa;
    let mut coef: Vec<C64> = vec![w, dw];
    let mut value = w + dw * h;
    let mut deriv = dw;
    let mut hp = ONE; // h^{m-1} after the update below
    let mut quiet = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let mut rhs = r0 * coef[n];
        if n >= 1 {
            rhs += r1 * coef[n - 1];
        }
        if n >= 2 {
            rhs += 0.25 * coef[n - 2];
        }
        rhs -= 2.0 * c * (nf + 1.0) * nf * coef[n + 1];
        rhs -= nf * (nf - 1.0) * coef[n];
        let next = rhs / (c2 * (nf + 2.0) * (nf + 1.0));
        coef.push(next);
        let m = n + 2;
        // value term: next * h^m, derivative term: m * next * h^{m-1}
        hp *= h;
        let dterm = next * (m as f64) * hp;
        let vterm = next * hp * h;
        value += vterm;
        deriv += dterm;
        if vterm.norm() <= 1e-17 * value.norm() && dterm.norm() <= 1e-17 * deriv.norm() {
            quiet += 1;
            if quiet >= 3 {
                return Ok((value, deriv));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence { iterations: MAX_TERMS })
}
