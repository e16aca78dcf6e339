//! Complex scalar helpers shared by every module.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

pub use num_complex::Complex64 as C64;

pub const I: C64 = C64 { re: 0.0, im: 1.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };
pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// Returns `Some(n)` when `z` lies within `tol` of `-n` for a nonnegative integer `n`.
pub fn nonpositive_integer(z: C64, tol: f64) -> Option<u32> {
    if z.im.abs() > tol || z.re > tol {
        return None;
    }
    let n = (-z.re).round();
    if (z.re + n).abs() <= tol * (1.0 + n) && n < u32::MAX as f64 {
        Some(n as u32)
    } else {
        None
    }
}

/// Returns `Some(n)` when `z` lies within `tol` of the integer `n`.
pub fn near_integer(z: C64, tol: f64) -> Option<i64> {
    let n = z.re.round();
    if z.im.abs() <= tol && (z.re - n).abs() <= tol * (1.0 + n.abs()) {
        Some(n as i64)
    } else {
        None
    }
}

/// Relative distance `|a - b| / max(1, |b|)`.
pub fn rel_diff(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Phase convention for logarithms and powers.
///
/// `arg` values are mapped into the half-open interval `(lo, lo + 2pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchConvention {
    pub lo: f64,
}

impl BranchConvention {
    /// Principal branch, `arg z` in `(-pi, pi]`.
    pub const PRINCIPAL: BranchConvention = BranchConvention { lo: -PI };
    /// The sector used for Whittaker arguments `2ikx`, `arg` in `(-pi/2, 3pi/2]`.
    pub const WHITTAKER: BranchConvention = BranchConvention { lo: -PI / 2.0 };

    pub fn arg(&self, z: C64) -> f64 {
        let mut a = z.arg();
        while a <= self.lo {
            a += 2.0 * PI;
        }
        while a > self.lo + 2.0 * PI {
            a -= 2.0 * PI;
        }
        a
    }

    pub fn ln(&self, z: C64) -> C64 {
        C64::new(z.norm().ln(), self.arg(z))
    }

    pub fn pow(&self, z: C64, p: C64) -> C64 {
        if z == ZERO {
            return if p == ZERO { ONE } else { ZERO };
        }
        (p * self.ln(z)).exp()
    }
}

impl Default for BranchConvention {
    fn default() -> Self {
        Self::PRINCIPAL
    }
}

/// Error from parsing a complex literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseComplexError(pub String);

impl fmt::Display for ParseComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse complex literal '{}'", self.0)
    }
}

impl std::error::Error for ParseComplexError {}

/// Parses literals such as `1.5`, `-2i`, `0+1i`, `0.3-0.2i`, `1e-3+2e2i` or `i`.
pub fn parse_complex(s: &str) -> Result<C64, ParseComplexError> {
    let err = || ParseComplexError(s.to_string());
    let t: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err());
    }
    if let Some(body) = t.strip_suffix(['i', 'j']) {
        // find the split between real and imaginary parts: last sign not following an exponent marker
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx];
            if (ch == b'+' || ch == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => f64::from_str(other).map_err(|_| err())?,
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            f64::from_str(re_part).map_err(|_| err())?
        };
        Ok(C64::new(re, im))
    } else {
        f64::from_str(&t).map(re).map_err(|_| err())
    }
}

/// Formats a complex number in the literal syntax accepted by [`parse_complex`].
pub fn format_complex(z: C64) -> String {
    if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Serde adapter writing complex numbers as `{"re": .., "im": ..}`.
pub mod serde_complex {
    use super::C64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct ReIm {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(z: &C64, s: S) -> Result<S::Ok, S::Error> {
        ReIm { re: z.re, im: z.im }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<C64, D::Error> {
        let v = ReIm::deserialize(d)?;
        Ok(C64::new(v.re, v.im))
    }
}
