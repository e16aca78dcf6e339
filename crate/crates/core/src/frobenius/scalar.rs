use crate::complex::C64;
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact complex rational numbers.
pub type CRational = Complex<BigRational>;

/// Field of coefficients for the series engine: complex floats or exact complex rationals.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Arithmetic is exact; zero tests are equality tests.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;
    fn from_ratio(r: &BigRational) -> Self;
    fn imag_unit() -> Self;
    /// Approximate modulus, used for pivoting and tolerance tests.
    fn magnitude(&self) -> f64;
    fn to_c64(&self) -> C64;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_ratio(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Zero test relative to `scale`: exact equality for exact scalars.
    fn negligible(&self, scale: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= 1e-13 * scale.max(f64::MIN_POSITIVE)
        }
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        C64::new(n as f64, 0.0)
    }

    fn from_ratio(r: &BigRational) -> Self {
        C64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn imag_unit() -> Self {
        C64::new(0.0, 1.0)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn to_c64(&self) -> C64 {
        *self
    }
}

impl Scalar for CRational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn from_ratio(r: &BigRational) -> Self {
        Complex::new(r.clone(), BigRational::zero())
    }

    fn imag_unit() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    fn to_c64(&self) -> C64 {
        C64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

/// Exact complex rational `(a + b i) / den`.
pub fn crational(a: i64, b: i64, den: i64) -> CRational {
    let d = BigInt::from(den);
    Complex::new(BigRational::new(BigInt::from(a), d.clone()), BigRational::new(BigInt::from(b), d))
}

/// Bernoulli numbers `B_0 .. B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        let mut sum = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, j)
        for (j, bj) in b.iter().enumerate() {
            sum += BigRational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-sum / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli(8);
        let r = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[3], r(0, 1));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[8], r(-1, 30));
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let third = crational(1, 0, 3);
        let sum = third.clone() + third.clone() + third;
        assert_eq!(sum, CRational::one());
        let i = CRational::imag_unit();
        assert_eq!(i.clone() * i, -CRational::one());
    }
}
