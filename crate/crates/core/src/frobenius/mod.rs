//! Frobenius series at a regular singular point: recursion matrices, the
//! truncated-determinant criterion at `nu = -n/2`, forward series solutions and
//! the `x~ = e^{-s x}` transform that maps the `x = infinity` analysis onto the
//! same engine.

mod expansions;
mod family;
mod scalar;

pub use expansions::{
    coulomb_series, cosh_sq_series, cosh_sq_tail, csch_sq_laurent, free_series, sinh_sq_series, sinh_sq_tail, tilde_cosh_sq,
    tilde_sinh_sq,
};
pub use family::{find_candidates, SeriesFamily, Window};
pub use scalar::{bernoulli, crational, factorial, CRational, Scalar};

use crate::error::{Error, Result};

/// `V = (nu^2 - 1/4)/x^2 + sum_{n >= -1} v_n x^n` at energy `k^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPotential<T> {
    pub nu: T,
    pub k: T,
    /// `v[i]` holds `v_{i-1}`; coefficients beyond the end are zero.
    pub v: Vec<T>,
}

impl<T: Scalar> SeriesPotential<T> {
    pub fn new(nu: T, k: T, v: Vec<T>) -> Self {
        SeriesPotential { nu, k, v }
    }

    /// Laurent coefficient `v_n`, `n >= -1`.
    pub fn coeff(&self, n: i64) -> T {
        if n < -1 {
            return T::zero();
        }
        self.v.get((n + 1) as usize).cloned().unwrap_or_else(T::zero)
    }

    /// Same potential with the centrifugal index replaced.
    pub fn with_nu(&self, nu: T) -> Self {
        SeriesPotential { nu, k: self.k.clone(), v: self.v.clone() }
    }

    /// Coefficient of `psi_j` in the recursion row `m >= 1`, for `j < m`.
    fn lower(&self, m: usize, j: usize) -> T {
        let mut e = self.coeff(m as i64 - 2 - j as i64);
        if j + 2 == m {
            e = e - self.k.clone() * self.k.clone();
        }
        e
    }

    /// `-m (m + 2 nu)`, the coefficient of `psi_m` in row `m`.
    fn diagonal(&self, m: usize) -> T {
        let mf = T::from_i64(m as i64);
        -(mf.clone() * (mf + T::from_i64(2) * self.nu.clone()))
    }
}

/// The first `n` rows of the recursion `sum_j M_{mj} psi_j = 0` restricted to
/// `psi_0 .. psi_{n-1}`; `last` is the coefficient of `psi_n` in row `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecursionMatrix<T> {
    pub order: usize,
    /// Row-major `n x n` entries; row `i` is recursion row `m = i + 1`.
    pub entries: Vec<Vec<T>>,
    pub last: T,
}

impl<T: Scalar> RecursionMatrix<T> {
    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row][col]
    }

    pub fn det(&self) -> T {
        determinant(self.entries.clone())
    }
}

/// Recursion matrix of order `n` at the potential's own `nu`.
pub fn build_matrix<T: Scalar>(pot: &SeriesPotential<T>, n: usize) -> Result<RecursionMatrix<T>> {
    if n == 0 {
        return Err(Error::invalid("recursion matrix order must be at least 1"));
    }
    let mut entries = vec![vec![T::zero(); n]; n];
    for (i, row) in entries.iter_mut().enumerate() {
        let m = i + 1;
        for (j, e) in row.iter_mut().enumerate().take(m) {
            *e = pot.lower(m, j);
        }
        if m < n {
            row[m] = pot.diagonal(m);
        }
    }
    Ok(RecursionMatrix { order: n, entries, last: pot.diagonal(n) })
}

/// `det M^(n)` at `nu = -n/2`; the potential's own `nu` is replaced.
pub fn det_truncation<T: Scalar>(pot: &SeriesPotential<T>, n: usize) -> Result<T> {
    let critical = pot.with_nu(T::from_frac(-(n as i64), 2));
    Ok(build_matrix(&critical, n)?.det())
}

/// Determinant by Gaussian elimination; pivots are chosen by modulus.
pub fn determinant<T: Scalar>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    let mut det = T::one();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r, &s| a[r][col].magnitude().total_cmp(&a[s][col].magnitude()));
        let Some(p) = pivot else {
            return T::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det = det * piv.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / piv.clone();
            for c in col..n {
                let t = f.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - t;
            }
        }
    }
    det
}

/// Which exponent `lambda = 1/2 +- nu` the series starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// `psi = sum_m psi_m x^{m + lambda}` with `psi_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSolution<T> {
    pub lambda: T,
    pub coefficients: Vec<T>,
    /// Order at which `m (m + 2 nu) = 0` with a consistent right side; the
    /// coefficient there is free and has been set to zero.
    pub free_order: Option<usize>,
}

/// Solves the recursion forward through order `order`.
pub fn solve_series<T: Scalar>(pot: &SeriesPotential<T>, branch: Branch, order: usize) -> Result<SeriesSolution<T>> {
    if order == 0 {
        return Err(Error::invalid("series order must be at least 1"));
    }
    let p = match branch {
        Branch::Plus => pot.clone(),
        Branch::Minus => pot.with_nu(-pot.nu.clone()),
    };
    let lambda = T::from_frac(1, 2) + p.nu.clone();
    let mut psi = vec![T::one()];
    let mut free_order = None;
    for m in 1..=order {
        let mut rhs = T::zero();
        let mut scale = 0.0f64;
        for (j, pj) in psi.iter().enumerate() {
            let t = p.lower(m, j) * pj.clone();
            scale = scale.max(t.magnitude());
            rhs = rhs + t;
        }
        let d = p.diagonal(m);
        if d.negligible(m as f64 * m as f64) {
            if rhs.negligible(scale) {
                free_order.get_or_insert(m);
                psi.push(T::zero());
                continue;
            }
            return Err(Error::Breakdown { order: m, residual: rhs.magnitude() });
        }
        psi.push(-(rhs / d));
    }
    Ok(SeriesSolution { lambda, coefficients: psi, free_order })
}

/// Residual of each recursion row `m = 1 .. N` for a series solution.
pub fn series_residual<T: Scalar>(pot: &SeriesPotential<T>, sol: &SeriesSolution<T>) -> Vec<T> {
    let p = pot.with_nu(sol.lambda.clone() - T::from_frac(1, 2));
    let psi = &sol.coefficients;
    (1..psi.len())
        .map(|m| {
            let mut r = p.diagonal(m) * psi[m].clone();
            for (j, pj) in psi.iter().enumerate().take(m) {
                r = r + p.lower(m, j) * pj.clone();
            }
            r
        })
        .collect()
}

/// Potential in the frame `x~ = e^{-s x}` for `V = sum_{n >= 1} a_n e^{-n s x}`.
///
/// `a[i]` holds `a_{i+1}`. The result has `nu~ = i k / s` (the branch
/// `x~^{nu~} = e^{-ikx}`), `v~_m = a_{m+2} / s^2`, and no separate energy term.
pub fn tilde_transform<T: Scalar>(s: T, a: &[T], k: T) -> SeriesPotential<T> {
    let s2 = s.clone() * s.clone();
    let v = a.iter().map(|an| an.clone() / s2.clone()).collect();
    SeriesPotential { nu: T::imag_unit() * k / s, k: T::zero(), v }
}

/// Momenta at which the tilde-frame criterion `nu~ = -n/2` holds: `k = i n s / 2`.
pub fn tilde_candidate_k(s: f64, n: usize) -> crate::complex::C64 {
    crate::complex::C64::new(0.0, n as f64 * s / 2.0)
}
