use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("{what} supports at most {max} vertices, got {n}{hint}")]
    UnsupportedSize {
        what: &'static str,
        n: usize,
        max: usize,
        hint: &'static str,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("not a starlike tree around vertex {center}: {reason}")]
    Classification { center: usize, reason: String },

    #[error("invalid path sequence: {0}")]
    InvalidSequence(String),

    #[error("report write failed after {written} complete records: {reason}")]
    Report { written: usize, reason: String },

    #[error("family kinds differ ({0} vs {1}); equal path sequences across families say nothing about isomorphism")]
    MixedFamilies(&'static str, &'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn too_large(what: &'static str, n: usize, max: usize) -> Self {
        Error::UnsupportedSize {
            what,
            n,
            max,
            hint: "",
        }
    }
}
