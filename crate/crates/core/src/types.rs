//! Records shared by the models, the Frobenius engine, the locator and the CLI.

use crate::complex::{serde_complex, C64};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Coordinate labels for the two axes of a pole-skipping point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// Centrifugal index `nu`.
    Nu,
    /// Depth parameter `kappa` of the `cosh^-2` well.
    Kappa,
    /// Coulomb coupling `e^2`.
    E2,
    /// Pole location `c` of the one-pole S-matrix.
    C,
    /// Momentum `k`.
    K,
    /// Coulomb parameter `kappa_C = e^2 / (2k)`.
    KappaC,
    /// Frequency `omega`.
    Omega,
}

impl Axis {
    pub fn name(&self) -> &'static str {
        match self {
            Axis::Nu => "nu",
            Axis::Kappa => "kappa",
            Axis::E2 => "e2",
            Axis::C => "c",
            Axis::K => "k",
            Axis::KappaC => "kappa_c",
            Axis::Omega => "omega",
        }
    }

    pub fn from_name(s: &str) -> Option<Axis> {
        Some(match s {
            "nu" => Axis::Nu,
            "kappa" => Axis::Kappa,
            "e2" => Axis::E2,
            "c" => Axis::C,
            "k" => Axis::K,
            "kappa_c" | "kappac" => Axis::KappaC,
            "omega" => Axis::Omega,
            _ => return None,
        })
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Gamma-function ladder families of the exactly solvable models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LadderFamily {
    Pole1,
    Pole2,
    Pole3,
    Zero1,
    Zero2,
    Zero3,
    /// The single pole of the one-pole model.
    SimplePole,
    /// The single zero of the one-pole model.
    SimpleZero,
}

impl LadderFamily {
    pub fn is_pole(&self) -> bool {
        matches!(
            self,
            LadderFamily::Pole1 | LadderFamily::Pole2 | LadderFamily::Pole3 | LadderFamily::SimplePole
        )
    }
}

/// Origin of the S-matrix pole at a pole-skipping point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoleOrigin {
    /// Zero of `F+` in the upper half `k`-plane.
    Bound,
    /// Zero of `F+` in the lower half `k`-plane.
    Antibound,
    /// Zero of `F+` on the real `k` axis (including `k = 0`).
    Threshold,
    /// Divergence of `F-`.
    Redundant,
}

impl PoleOrigin {
    pub fn name(&self) -> &'static str {
        match self {
            PoleOrigin::Bound => "bound",
            PoleOrigin::Antibound => "antibound",
            PoleOrigin::Threshold => "threshold",
            PoleOrigin::Redundant => "redundant",
        }
    }

    pub fn from_name(s: &str) -> Option<PoleOrigin> {
        Some(match s {
            "bound" => PoleOrigin::Bound,
            "antibound" => PoleOrigin::Antibound,
            "threshold" => PoleOrigin::Threshold,
            "redundant" => PoleOrigin::Redundant,
            _ => return None,
        })
    }

    /// Pole coming from a zero of `F+` at momentum `k`.
    pub fn from_jost_zero(k: C64, tol: f64) -> PoleOrigin {
        if k.im > tol {
            PoleOrigin::Bound
        } else if k.im < -tol {
            PoleOrigin::Antibound
        } else {
            PoleOrigin::Threshold
        }
    }
}

/// Origin of the S-matrix zero at a pole-skipping point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroOrigin {
    /// Zero of `F-`.
    Physical,
    /// Divergence of `F+`.
    Redundant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub pole: PoleOrigin,
    pub zero: ZeroOrigin,
    pub pole_family: Option<LadderFamily>,
    pub zero_family: Option<LadderFamily>,
}

impl Classification {
    pub fn is_redundant(&self) -> bool {
        self.pole == PoleOrigin::Redundant
    }
}

/// Directional limit `S ~ (a d1 + b d2) / (c d1 + d d2)` around a pole-skipping point,
/// with `d1` the parameter displacement and `d2` the momentum displacement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mobius {
    #[serde(with = "serde_complex")]
    pub a: C64,
    #[serde(with = "serde_complex")]
    pub b: C64,
    #[serde(with = "serde_complex")]
    pub c: C64,
    #[serde(with = "serde_complex")]
    pub d: C64,
    /// Largest relative misfit over the probe directions.
    pub residual: f64,
}

impl Mobius {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mobius { a, b, c, d, residual: 0.0 }
    }

    pub fn eval(&self, d1: C64, d2: C64) -> C64 {
        (self.a * d1 + self.b * d2) / (self.c * d1 + self.d * d2)
    }

    /// `ad - bc` relative to the coefficient scale; zero for a smooth point.
    pub fn normalized_determinant(&self) -> f64 {
        let scale = (self.a.norm() * self.d.norm()).max(self.b.norm() * self.c.norm());
        if scale == 0.0 {
            return 0.0;
        }
        (self.a * self.d - self.b * self.c).norm() / scale
    }

    /// Coefficients scaled so the largest has unit modulus and is real positive.
    pub fn normalized(&self) -> [C64; 4] {
        let v = [self.a, self.b, self.c, self.d];
        let big = v.iter().copied().fold(v[0], |m, x| if x.norm() > m.norm() { x } else { m });
        let phase = big / big.norm();
        v.map(|x| x / phase / big.norm())
    }

    /// Distance between two Mobius coefficient sets modulo overall scale.
    pub fn projective_distance(&self, other: &Mobius) -> f64 {
        let p = self.normalized();
        let q = other.normalized();
        p.iter().zip(q.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }
}

/// A pole-skipping point: a simultaneous pole and zero of S in the `(param, k)` plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "PoleSkipRecord", from = "PoleSkipRecord")]
pub struct PoleSkipPoint {
    /// Ladder level (1-based) used to enumerate catalogs.
    pub n: u32,
    pub param_axis: Axis,
    pub k_axis: Axis,
    pub param: C64,
    pub k: C64,
    /// Frobenius truncation order that detects the point, if any.
    pub series_order: Option<u32>,
    pub classification: Option<Classification>,
    pub mobius: Option<Mobius>,
}

impl PoleSkipPoint {
    pub fn new(n: u32, param_axis: Axis, k_axis: Axis, param: C64, k: C64) -> Self {
        PoleSkipPoint {
            n,
            param_axis,
            k_axis,
            param,
            k,
            series_order: None,
            classification: None,
            mobius: None,
        }
    }

    pub fn class_name(&self) -> &'static str {
        self.classification.map(|c| c.pole.name()).unwrap_or("unclassified")
    }

    pub fn is_redundant(&self) -> bool {
        self.classification.map(|c| c.is_redundant()).unwrap_or(false)
    }

    pub fn distance(&self, param: C64, k: C64) -> f64 {
        (self.param - param).norm().max((self.k - k).norm())
    }
}

#[derive(Serialize, Deserialize)]
struct PoleSkipRecord {
    n: u32,
    #[serde(with = "serde_complex")]
    param: C64,
    #[serde(with = "serde_complex")]
    k: C64,
    class: String,
    redundant: bool,
    param_axis: Axis,
    k_axis: Axis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    series_order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero: Option<ZeroOrigin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pole_family: Option<LadderFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero_family: Option<LadderFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mobius: Option<Mobius>,
}

impl From<PoleSkipPoint> for PoleSkipRecord {
    fn from(p: PoleSkipPoint) -> Self {
        PoleSkipRecord {
            n: p.n,
            param: p.param,
            k: p.k,
            class: p.class_name().to_string(),
            redundant: p.is_redundant(),
            param_axis: p.param_axis,
            k_axis: p.k_axis,
            series_order: p.series_order,
            zero: p.classification.map(|c| c.zero),
            pole_family: p.classification.and_then(|c| c.pole_family),
            zero_family: p.classification.and_then(|c| c.zero_family),
            mobius: p.mobius,
        }
    }
}

impl From<PoleSkipRecord> for PoleSkipPoint {
    fn from(r: PoleSkipRecord) -> Self {
        let classification = PoleOrigin::from_name(&r.class).map(|pole| Classification {
            pole,
            zero: r.zero.unwrap_or(ZeroOrigin::Physical),
            pole_family: r.pole_family,
            zero_family: r.zero_family,
        });
        PoleSkipPoint {
            n: r.n,
            param_axis: r.param_axis,
            k_axis: r.k_axis,
            param: r.param,
            k: r.k,
            series_order: r.series_order,
            classification,
            mobius: r.mobius,
        }
    }
}
