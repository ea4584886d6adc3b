use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors produced by the constructions, verifiers and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain.
    InvalidInput(String),
    /// A construction was asked for on an `N` that does not satisfy its
    /// structural precondition. The payload names the failed condition.
    CaseMismatch(&'static str),
    /// A representation, certificate or witness does not cover the vertex
    /// set of the graph it is checked against.
    VertexMismatch(String),
    /// Building the graph would exceed the dense-adjacency size limit.
    GraphTooLarge { vertices: u64, limit: u64 },
    /// An oracle guard stopped the search before an answer was found.
    Resource(ResourceError),
    /// Exact rational arithmetic left the representable range.
    Overflow,
}

/// A guard of the brute-force oracle was exceeded.
///
/// `lower`/`upper` carry whatever bounds on the answer were established
/// before the search stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceError {
    pub guard: &'static str,
    pub limit: usize,
    pub actual: usize,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::CaseMismatch(cond) => write!(f, "case mismatch: {cond}"),
            Error::VertexMismatch(msg) => write!(f, "vertex mismatch: {msg}"),
            Error::GraphTooLarge { vertices, limit } => {
                write!(f, "graph too large: {vertices} vertices (limit {limit})")
            }
            Error::Resource(r) => r.fmt(f),
            Error::Overflow => f.write_str("rational arithmetic overflow"),
        }
    }
}

impl fmt::Display for ResourceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "resource guard `{}` exceeded: {} > {}", self.guard, self.actual, self.limit)?;
        match (self.lower, self.upper) {
            (Some(lo), Some(hi)) => write!(f, " (known bounds: {lo} <= box <= {hi})"),
            (Some(lo), None) => write!(f, " (known bound: box >= {lo})"),
            (None, Some(hi)) => write!(f, " (known bound: box <= {hi})"),
            (None, None) => Ok(()),
        }
    }
}

impl core::error::Error for Error {}

impl From<ResourceError> for Error {
    fn from(e: ResourceError) -> Self {
        Error::Resource(e)
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
