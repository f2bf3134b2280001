//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by model construction, estimation, and the monitors.
///
/// Monitors themselves never return `Err`: every failure mode maps to an
/// `Unverified` verdict with a reason string. The error type is for the
/// operations underneath them, where callers can still react.
#[derive(Debug, Error)]
pub enum Error {
    /// An MDP invariant does not hold (row sums, discount range, finiteness).
    #[error("invalid MDP: {0}")]
    InvalidMdp(String),

    /// A policy invariant does not hold (row sums, entry range).
    #[error("invalid policy: {0}")]
    InvalidPolicy(String),

    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    Param(String),

    /// A linear system that should be nonsingular failed to solve; indicates
    /// a violated invariant upstream, never silently regularized.
    #[error("singular linear system: {0}")]
    Singular(String),

    /// Required state-action pairs have no observations yet.
    #[error("missing data for {} state-action pair(s), first {:?}", .pairs.len(), .pairs.first())]
    MissingData {
        /// The uncovered `(state, action)` pairs.
        pairs: Vec<(usize, usize)>,
    },

    /// The method's applicability condition fails (feeds `Unverified` upstream).
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// A transition record does not fit the declared state/action spaces.
    #[error("instrumentation fault: {0}")]
    Instrumentation(String),

    /// A trace file is malformed.
    #[error("trace error at line {line}: {message}")]
    Trace {
        /// 1-based line number in the trace file.
        line: usize,
        /// What went wrong.
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
