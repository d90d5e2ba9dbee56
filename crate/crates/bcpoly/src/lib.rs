//! Exact arithmetic for the orthogonal polynomial system attached to root
//! systems of type BC: multivariate Jacobi polynomials on the torus, Jack
//! polynomials, and the shifted (interpolation) polynomials that tie the two
//! together, plus an asymptotics harness for degenerating the parameters
//! along Vershik–Kerov-type sequences of partitions.
//!
//! Everything except the floating-point limit profiles in [`asymptotics`] is
//! carried out over arbitrary-precision rationals, so identities are checked
//! exactly rather than to a tolerance.

pub mod asymptotics;
pub mod interp;
pub mod jacobi;
pub mod json;
pub mod linalg;
pub mod multipoly;
pub mod partition;
pub mod rational;
pub mod symfun;
pub mod theta1;

pub use partition::Partition;
pub use rational::Q;

use std::fmt;

/// Errors surfaced by the library. Every variant names the violated
/// precondition; the CLI maps them to one-line diagnostics and a nonzero
/// exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition literal was not weakly decreasing or contained a negative part.
    MalformedPartition(String),
    /// A rational literal could not be parsed as `p/q`.
    MalformedRational(String),
    /// An argument was outside the domain documented for the operation.
    Domain(String),
    /// A linear system that should determine the answer was singular.
    DegenerateGrid(String),
    /// The torus inner product has no Laurent-polynomial weight at these parameters.
    ExactModeUnavailable,
    /// A Vershik–Kerov profile cannot be realized at the requested size.
    InfeasibleRealization(String),
    /// The requested parameter series needs a parity choice that was not supplied.
    MissingParity(u32),
    /// The requested parameter series is outside the implemented range.
    OutOfScopeSeries(u32),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedPartition(s) => write!(f, "malformed partition: {s}"),
            Error::MalformedRational(s) => write!(f, "malformed rational: {s}"),
            Error::Domain(s) => write!(f, "domain error: {s}"),
            Error::DegenerateGrid(s) => write!(f, "degenerate grid: {s}"),
            Error::ExactModeUnavailable => {
                write!(f, "exact mode unavailable; use numeric quadrature")
            }
            Error::InfeasibleRealization(s) => write!(f, "infeasible realization: {s}"),
            Error::MissingParity(id) => {
                write!(f, "series {id} needs --parity even|odd")
            }
            Error::OutOfScopeSeries(id) => {
                write!(f, "series {id} is not a torus-parameter series")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
