//! Dormand-Prince 5(4) integration of `u'' = (V(x) - k^2) u` for complex `u`.

use crate::complex::C64;
use crate::error::{Error, Result};

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
/// Fifth-order weights minus embedded fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// `(u, u')`.
pub type State = [C64; 2];

#[derive(Debug, Clone, Copy)]
pub struct StepControl {
    pub rtol: f64,
    pub max_steps: usize,
}

fn rhs<V: Fn(f64) -> C64>(v: &V, k2: C64, x: f64, y: &State) -> State {
    [y[1], (v(x) - k2) * y[0]]
}

/// Integrates from `x0` to `x1` (either direction).
///
/// The local error of each component is measured against the local wave
/// scale `q = sqrt|V - k^2| + |k| + 1e-3`, so `u` and `u'/q` are weighted alike.
pub fn integrate<V: Fn(f64) -> C64>(v: &V, k: C64, x0: f64, y0: State, x1: f64, ctl: StepControl) -> Result<State> {
    let k2 = k * k;
    let span = x1 - x0;
    if span == 0.0 {
        return Ok(y0);
    }
    let dir = span.signum();
    let mut x = x0;
    let mut y = y0;
    let scale_q = |x: f64| (v(x) - k2).norm().sqrt() + k.norm() + 1e-3;
    let mut h = dir * (0.01 / scale_q(x)).min(span.abs());
    if x0 != 0.0 {
        h = dir * h.abs().min(0.1 * x0.abs());
    }
    let mut k1 = rhs(v, k2, x, &y);
    for _ in 0..ctl.max_steps {
        let remaining = x1 - x;
        if remaining * dir <= 0.0 {
            return Ok(y);
        }
        let last = h.abs() >= remaining.abs();
        if last {
            h = remaining;
        }
        let mut stages = [[C64::new(0.0, 0.0); 2]; 7];
        stages[0] = k1;
        for s in 1..7 {
            let mut ys = y;
            for (j, st) in stages.iter().enumerate().take(s) {
                let a = A[s][j];
                if a != 0.0 {
                    ys[0] += h * a * st[0];
                    ys[1] += h * a * st[1];
                }
            }
            stages[s] = rhs(v, k2, x + C[s] * h, &ys);
        }
        let mut y_new = y;
        for (j, st) in stages.iter().enumerate().take(6) {
            let b = A[6][j];
            y_new[0] += h * b * st[0];
            y_new[1] += h * b * st[1];
        }
        let mut err = [C64::new(0.0, 0.0); 2];
        for (j, st) in stages.iter().enumerate() {
            err[0] += h * E[j] * st[0];
            err[1] += h * E[j] * st[1];
        }
        let q = scale_q(x);
        let size_y = y[0].norm().max(y_new[0].norm());
        let size_dy = y[1].norm().max(y_new[1].norm());
        let sc0 = ctl.rtol * (size_y + size_dy / q);
        let sc1 = ctl.rtol * (q * size_y + size_dy);
        let ratio = if sc0 == 0.0 || sc1 == 0.0 {
            0.0
        } else {
            (err[0].norm() / sc0).max(err[1].norm() / sc1)
        };
        if !ratio.is_finite() {
            return Err(Error::StiffnessFailure { x });
        }
        if ratio <= 1.0 {
            x = if last { x1 } else { x + h };
            y = y_new;
            k1 = stages[6];
            let grow = if ratio == 0.0 { 5.0 } else { (0.9 * ratio.powf(-0.2)).min(5.0) };
            h *= grow;
            if last {
                return Ok(y);
            }
        } else {
            h *= (0.9 * ratio.powf(-0.2)).max(0.2);
            if h.abs() <= 1e-14 * x.abs().max(1e-300) {
                return Err(Error::StiffnessFailure { x });
            }
        }
    }
    Err(Error::StiffnessFailure { x })
}
