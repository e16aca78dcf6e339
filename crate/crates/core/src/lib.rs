//! Pole-skipping in exactly solvable scattering problems.
//!
//! The crate provides complex special functions, closed-form Jost functions and
//! S-matrices, a Frobenius series engine with truncated-determinant criteria, a
//! numerical scattering solver with IR and UV cutoffs, a pole-skipping locator
//! and the near-horizon map used for holographic comparisons.

pub mod complex;
pub mod error;
pub mod frobenius;
pub mod holography;
pub mod locator;
pub mod models;
pub mod solver;
pub mod specfun;
pub mod types;

pub use complex::{c, parse_complex, BranchConvention, C64};
pub use error::{Error, Result};
pub use models::{JostConvention, JostPair, PotentialModel};
pub use types::{Axis, Classification, LadderFamily, Mobius, PoleOrigin, PoleSkipPoint, ZeroOrigin};
pub use frobenius::{find_candidates, SeriesFamily, SeriesPotential, Window};
pub use holography::{effective_potential, matsubara_dictionary, EffectiveProblem, MetricModel};
pub use locator::{classify, find_skip, slope_probe, ModelSkip, SkipFunction};
pub use solver::{NumericalPotential, SolverConfig};
