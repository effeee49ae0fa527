//! Error type shared across the crate.

use std::fmt;

/// Errors reported by table construction, region evaluation and the solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A table or law was built from components whose alphabet sizes disagree.
    /// The message names the offending factor.
    DimensionMismatch(String),
    /// A probability table violates its normalization or nonnegativity
    /// invariant.
    InvalidDistribution(String),
    /// A variable name was not found in a table.
    UnknownVariable(String),
    /// The x/y/z groups passed to a mutual-information query overlap.
    OverlappingGroups(String),
    /// A scalar argument is outside its documented domain.
    OutOfRange(String),
    /// A feedback law failed the consistency check required by a region
    /// evaluator. Carries the measured deviation and the worst (a, b) cell.
    ConsistencyViolation { max_deviation: f64, worst_cell: Vec<usize> },
    /// The 2x2 linear system for the binary exchange marginal is singular.
    SingularMatrix(String),
    /// A solved parameter point lies outside the probability simplex.
    InvalidParameterPoint(String),
    /// A search was asked to optimize over an empty feasible set, or was
    /// started from an infeasible point.
    Infeasible(String),
    /// A region has no finite maximum along some direction.
    UnboundedRegion(String),
    /// An iterative solver did not converge within its iteration cap.
    NoConvergence(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
            Error::InvalidDistribution(m) => write!(f, "invalid distribution: {m}"),
            Error::UnknownVariable(m) => write!(f, "unknown variable: {m}"),
            Error::OverlappingGroups(m) => write!(f, "overlapping variable groups: {m}"),
            Error::OutOfRange(m) => write!(f, "argument out of range: {m}"),
            Error::ConsistencyViolation { max_deviation, worst_cell } => write!(
                f,
                "consistency violation: max deviation {max_deviation:.3e} at cell {worst_cell:?}"
            ),
            Error::SingularMatrix(m) => write!(f, "singular matrix: {m}"),
            Error::InvalidParameterPoint(m) => write!(f, "invalid parameter point: {m}"),
            Error::Infeasible(m) => write!(f, "infeasible: {m}"),
            Error::UnboundedRegion(m) => write!(f, "unbounded region: {m}"),
            Error::NoConvergence(m) => write!(f, "no convergence: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
