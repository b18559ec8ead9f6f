use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation is undefined for an empty input (`n = 0`).
    #[error("{0}: input must be nonempty (n >= 1)")]
    EmptyInput(&'static str),

    /// A brute-force routine was asked for more than its configured limit.
    #[error("{what}: size {size} exceeds the configured cutoff {cutoff}")]
    CutoffExceeded {
        what: &'static str,
        size: usize,
        cutoff: usize,
    },

    /// Malformed input value (bad partition, permutation, subset, ...).
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    /// Two routes that must agree produced different values.
    #[error("invariant failure in {what}: {left} != {right}")]
    InvariantFailure {
        what: &'static str,
        left: String,
        right: String,
    },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }
}
