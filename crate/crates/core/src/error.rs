//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected: vertex {unreachable} is unreachable from vertex {from}")]
    Disconnected { from: usize, unreachable: usize },

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("invalid metric:\n{0}")]
    InvalidMetric(crate::metric::MetricReport),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("power iteration did not converge after {iterations} iterations (last residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("full spectrum unavailable: n = {n} exceeds the Jacobi cap {cap}; use the Perron eigenpair instead")]
    SpectrumUnavailable { n: usize, cap: usize },

    #[error("zero vector is not a valid input")]
    ZeroVector,
}

/// Errors raised while reading edge-list or numeric-table text.
///
/// Each malformed-input class gets its own variant so callers (and tests)
/// can distinguish them.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    BadHeader { line: usize },

    #[error("line {line}: malformed edge, expected \"u v\"")]
    BadEdge { line: usize },

    #[error("line {line}: vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { line: usize, id: u64, n: usize },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },

    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: u32 },

    #[error("line {line}: reversed edge {u} {v}, edges must satisfy u < v")]
    ReversedEdge { line: usize, u: u32, v: u32 },

    #[error("expected {expected} edge lines, found {got}")]
    EdgeCountMismatch { expected: usize, got: usize },

    #[error("line {line}: malformed number")]
    BadNumber { line: usize },

    #[error("line {line}: expected {expected} values in row, found {got}")]
    BadRowLength {
        line: usize,
        expected: usize,
        got: usize,
    },

    #[error("expected {expected} rows, found {got}")]
    RowCountMismatch { expected: usize, got: usize },
}
