use super::scalar::{bernoulli, factorial, Scalar};
use super::{tilde_transform, SeriesPotential};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Zero potential with centrifugal index `nu`.
pub fn free_series<T: Scalar>(nu: T, k: T) -> SeriesPotential<T> {
    SeriesPotential::new(nu, k, Vec::new())
}

/// `(nu^2 - 1/4)/x^2 + e^2/x`.
pub fn coulomb_series<T: Scalar>(e2: T, nu: T, k: T) -> SeriesPotential<T> {
    SeriesPotential::new(nu, k, vec![e2])
}

fn quarter<T: Scalar>() -> T {
    T::from_frac(1, 4)
}

/// Coefficients `c_j` of `1/sinh^2 x - 1/x^2 = sum_j c_j x^{2j}`, `j = 0 .. count-1`.
fn csch_sq_coeffs(count: usize) -> Vec<BigRational> {
    let b = bernoulli(2 * count + 2);
    (1..=count)
        .map(|m| {
            // -2^{2m} B_{2m} (2m - 1) / (2m)!
            let num = BigInt::from(1u64) << (2 * m);
            let r = BigRational::new(num * BigInt::from(2 * m - 1), factorial(2 * m));
            -(r * &b[2 * m])
        })
        .collect()
}

/// Coefficients `d_j` of `1/cosh^2 x = sum_j d_j x^{2j}`.
fn sech_sq_coeffs(count: usize) -> Vec<BigRational> {
    let b = bernoulli(2 * count + 2);
    (1..=count)
        .map(|m| {
            // 2^{2m} (2^{2m} - 1) B_{2m} (2m - 1) / (2m)!
            let p = BigInt::from(1u64) << (2 * m);
            let num = p.clone() * (p - BigInt::from(1)) * BigInt::from(2 * m - 1);
            BigRational::new(num, factorial(2 * m)) * &b[2 * m]
        })
        .collect()
}

fn even_laurent<T: Scalar>(scale: T, coeffs: &[BigRational], order: usize) -> Vec<T> {
    // v[0] = v_{-1} = 0, then v_0, v_1, ... with odd powers vanishing
    let mut v = vec![T::zero(); order + 2];
    for (j, cj) in coeffs.iter().enumerate() {
        let idx = 2 * j + 1;
        if idx < v.len() {
            v[idx] = scale.clone() * T::from_ratio(cj);
        }
    }
    v
}

/// Laurent coefficients `v_{-1} .. v_order` of `1/sinh^2 x - 1/x^2`.
pub fn csch_sq_laurent<T: Scalar>(order: usize) -> Vec<T> {
    even_laurent(T::one(), &csch_sq_coeffs(order / 2 + 1), order)
}

/// `(nu^2 - 1/4)/sinh^2 x` expanded through `x^order`.
pub fn sinh_sq_series<T: Scalar>(nu: T, k: T, order: usize) -> SeriesPotential<T> {
    let g = nu.clone() * nu.clone() - quarter::<T>();
    let v = csch_sq_laurent::<T>(order).into_iter().map(|c| g.clone() * c).collect();
    SeriesPotential::new(nu, k, v)
}

/// `-kappa(kappa - 1)/cosh^2 x` expanded through `x^order`, with the regular
/// solution `phi ~ x` (`nu = 1/2`).
pub fn cosh_sq_series<T: Scalar>(kappa: T, k: T, order: usize) -> SeriesPotential<T> {
    let g = -(kappa.clone() * (kappa - T::one()));
    let v = even_laurent(g, &sech_sq_coeffs(order / 2 + 1), order);
    SeriesPotential::new(T::from_frac(1, 2), k, v)
}

/// `a_1 .. a_count` with `(nu^2 - 1/4)/sinh^2 x = sum_n a_n e^{-2 n x}`.
pub fn sinh_sq_tail<T: Scalar>(nu: T, count: usize) -> Vec<T> {
    let g = nu.clone() * nu - quarter::<T>();
    (1..=count).map(|n| T::from_i64(4 * n as i64) * g.clone()).collect()
}

/// `a_1 .. a_count` with `-kappa(kappa - 1)/cosh^2 x = sum_n a_n e^{-2 n x}`.
pub fn cosh_sq_tail<T: Scalar>(kappa: T, count: usize) -> Vec<T> {
    let g = kappa.clone() * (kappa - T::one());
    (1..=count)
        .map(|n| {
            let sign = if n % 2 == 1 { -4 } else { 4 };
            T::from_i64(sign * n as i64) * g.clone()
        })
        .collect()
}

/// `(nu^2 - 1/4)/sinh^2 x` in the frame `x~ = e^{-2x}`.
pub fn tilde_sinh_sq<T: Scalar>(nu: T, k: T, count: usize) -> SeriesPotential<T> {
    tilde_transform(T::from_i64(2), &sinh_sq_tail(nu, count), k)
}

/// `-kappa(kappa - 1)/cosh^2 x` in the frame `x~ = e^{-2x}`.
pub fn tilde_cosh_sq<T: Scalar>(kappa: T, k: T, count: usize) -> SeriesPotential<T> {
    tilde_transform(T::from_i64(2), &cosh_sq_tail(kappa, count), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, C64};

    #[test]
    fn laurent_coefficients_match_functions() {
        let nu = c(0.8, 0.3);
        let pot = sinh_sq_series(nu, c(0.0, 0.0), 12);
        let x: f64 = 0.3;
        let mut sum = (nu * nu - 0.25) / (x * x);
        for n in -1..=12 {
            sum += pot.coeff(n) * x.powi(n as i32);
        }
        let exact = (nu * nu - 0.25) / x.sinh().powi(2);
        assert!((sum - exact).norm() < 1e-12, "{}", (sum - exact).norm());

        let kappa = c(1.7, -0.2);
        let pot = cosh_sq_series(kappa, c(0.0, 0.0), 30);
        let mut sum = C64::new(0.0, 0.0);
        for n in -1..=30 {
            sum += pot.coeff(n) * x.powi(n as i32);
        }
        let exact = -kappa * (kappa - 1.0) / x.cosh().powi(2);
        assert!((sum - exact).norm() < 1e-12, "{}", (sum - exact).norm());
    }

    #[test]
    fn tail_coefficients_match_functions() {
        let x: f64 = 2.5;
        let u = (-2.0 * x).exp();
        let nu = c(1.3, 0.1);
        let s: C64 = sinh_sq_tail(nu, 40).iter().enumerate().map(|(i, a)| a * u.powi(i as i32 + 1)).sum();
        assert!((s - (nu * nu - 0.25) / x.sinh().powi(2)).norm() < 1e-14);
        let kappa = c(2.2, 0.4);
        let s: C64 = cosh_sq_tail(kappa, 40).iter().enumerate().map(|(i, a)| a * u.powi(i as i32 + 1)).sum();
        assert!((s + kappa * (kappa - 1.0) / x.cosh().powi(2)).norm() < 1e-14);
    }
}
