use thiserror::Error;

/// Crate-wide error type.
///
/// `Domain` messages name the violated precondition so the CLI can print
/// them verbatim as diagnostics. Violations of *internal* invariants
/// (exact divisions with a remainder, negative inclusion-exclusion
/// totals) panic instead: they would mean one of the counting theorems
/// is false and must surface loudly rather than round away.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    Domain(String),
    #[error("operation requires a nonempty subset")]
    EmptySubset,
    #[error("{what} {requested} exceeds the enumeration limit {limit}")]
    EnumerationLimit {
        what: &'static str,
        requested: u64,
        limit: u64,
    },
}

impl Error {
    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
