use crate::complex::C64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at argument -{0}")]
    PoleAtNonpositiveInteger(u32),

    #[error("indeterminate gamma ratio: {poles} numerator and denominator poles coincide")]
    IndeterminateRatio { poles: usize },

    #[error("hypergeometric parameter c = {c} is a nonpositive integer")]
    IllDefinedC { c: C64 },

    #[error("connection formula degenerate: c - a - b = {shift} is an integer")]
    ConnectionDegenerate { shift: i64 },

    #[error("Whittaker order ill-defined: 2mu = {two_mu} is a negative integer")]
    IllDefinedOrder { two_mu: C64 },

    #[error("evaluation point sits on a pole")]
    PoleHit,

    #[error("k = 0 is a branch point of the Coulomb phase")]
    BranchPointAtZeroK,

    #[error("series recursion breaks down at order {order} (residual {residual:e})")]
    Breakdown { order: usize, residual: f64 },

    #[error("no root found in the search window")]
    NoRootInWindow,

    #[error("integrator step size underflow near x = {x}")]
    StiffnessFailure { x: f64 },

    #[error("origin singularity too strong for the regular solution (exponent {exponent})")]
    OriginSingularityTooStrong { exponent: C64 },

    #[error("potential has not decayed to the tail tolerance by x = {x_max}")]
    TailNotReached { x_max: f64 },

    #[error("Jost function drifts by {drift:e} between matching points")]
    WronskianDrift { drift: f64 },

    #[error("iteration failed to converge after {iterations} steps")]
    NoConvergence { iterations: usize },

    #[error("degenerate double zero: Jacobian is singular at the converged point")]
    DegenerateDoubleZero,

    #[error("Mobius fit degenerate (residual {residual:e})")]
    FitDegenerate { residual: f64 },

    #[error("winding number ambiguous: |f| = {min_modulus:e} on the contour")]
    AmbiguousWinding { min_modulus: f64 },

    #[error("mirror point fails the symmetry check by {mismatch:e}")]
    SymmetryViolation { mismatch: f64 },

    #[error("horizon is degenerate: F'(r_h) vanishes")]
    HorizonDegeneracy,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
