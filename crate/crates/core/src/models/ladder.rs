use super::PotentialModel;
use crate::complex::{C64, I};
use crate::error::{Error, Result};
use crate::types::{Axis, LadderFamily};

/// `v -> offset + slope * v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Affine {
    pub offset: C64,
    pub slope: C64,
}

impl Affine {
    pub fn new(offset: C64, slope: C64) -> Self {
        Affine { offset, slope }
    }

    pub fn eval(&self, v: C64) -> C64 {
        self.offset + self.slope * v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    Pole,
    Zero,
}

/// One gamma-function ladder: the values `generator(n)`, `n = 0, 1, 2, ...`,
/// at which `gamma_argument` equals `-n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderSpec {
    pub family: LadderFamily,
    pub kind: LadderKind,
    /// Axis along which the ladder is generated (`k`, or `kappa_C` for Coulomb).
    pub axis: Axis,
    /// `n -> value`.
    pub generator: Affine,
    /// `value -> argument` of the gamma function responsible for the ladder.
    pub gamma_argument: Affine,
}

impl LadderSpec {
    pub fn at(&self, n: u32) -> C64 {
        self.generator.eval(C64::new(n as f64, 0.0))
    }

    pub fn points(&self, count: u32) -> Vec<C64> {
        (0..count).map(|n| self.at(n)).collect()
    }
}

fn spec(family: LadderFamily, axis: Axis, generator: Affine, gamma_argument: Affine) -> LadderSpec {
    let kind = if family.is_pole() { LadderKind::Pole } else { LadderKind::Zero };
    LadderSpec { family, kind, axis, generator, gamma_argument }
}

/// Gamma-function ladders of a model at its current parameter values.
pub fn ladders(model: &PotentialModel) -> Result<Vec<LadderSpec>> {
    use LadderFamily::*;
    let one = C64::new(1.0, 0.0);
    match *model {
        PotentialModel::OnePole { .. } => Err(Error::invalid("the one-pole model has no gamma-function ladders")),
        PotentialModel::Coulomb { nu, .. } => {
            let h = nu + 0.5;
            Ok(vec![
                // nu + 1/2 + i kappa = -n
                spec(Pole1, Axis::KappaC, Affine::new(I * h, I), Affine::new(h, I)),
                // nu + 1/2 - i kappa = -n
                spec(Zero1, Axis::KappaC, Affine::new(-I * h, -I), Affine::new(h, -I)),
            ])
        }
        PotentialModel::SinhSq { nu } => {
            let h = nu + 0.5;
            Ok(vec![
                // nu + 1/2 - ik = -n
                spec(Pole1, Axis::K, Affine::new(-I * h, -I), Affine::new(h, -I)),
                // 1 + ik = -n (the gamma factor of F-)
                spec(Pole2, Axis::K, Affine::new(I, I), Affine::new(one, I)),
                // nu + 1/2 + ik = -n
                spec(Zero1, Axis::K, Affine::new(I * h, I), Affine::new(h, I)),
                // 1 - ik = -n (the gamma factor of F+)
                spec(Zero2, Axis::K, Affine::new(-I, -I), Affine::new(one, -I)),
            ])
        }
        PotentialModel::CoshSq { kappa } => Ok(vec![
            // (2 - ik - kappa)/2 = -n
            spec(Pole1, Axis::K, Affine::new(I * (kappa - 2.0), -2.0 * I), Affine::new((2.0 - kappa) / 2.0, -I / 2.0)),
            // (1 - ik + kappa)/2 = -n
            spec(Pole2, Axis::K, Affine::new(-I * (kappa + 1.0), -2.0 * I), Affine::new((1.0 + kappa) / 2.0, -I / 2.0)),
            // 1 + ik = -n
            spec(Pole3, Axis::K, Affine::new(I, I), Affine::new(one, I)),
            // (2 + ik - kappa)/2 = -n
            spec(Zero1, Axis::K, Affine::new(-I * (kappa - 2.0), 2.0 * I), Affine::new((2.0 - kappa) / 2.0, I / 2.0)),
            // (1 + ik + kappa)/2 = -n
            spec(Zero2, Axis::K, Affine::new(I * (kappa + 1.0), 2.0 * I), Affine::new((1.0 + kappa) / 2.0, I / 2.0)),
            // 1 - ik = -n
            spec(Zero3, Axis::K, Affine::new(-I, -I), Affine::new(one, -I)),
        ]),
    }
}
