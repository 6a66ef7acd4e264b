use thiserror::Error;

use crate::bcl::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("unknown factor `{0}`")]
    UnknownFactor(String),

    #[error("invalid case base: {}", .0.join("; "))]
    Validation(Vec<String>),

    #[error("outcome `?` has no opposite")]
    UndefinedOpposite,

    #[error("usage error: {0}")]
    Usage(String),

    #[error("{what} exceeds capacity: {actual} atoms given, bound is {bound}")]
    Capacity {
        what: &'static str,
        bound: usize,
        actual: usize,
    },

    #[error("state {0} is not a state of the model")]
    StateNotInModel(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("case `{0}` is not a result-model case; use the reason-model translation")]
    NotResultCase(String),

    #[error("case base is inconsistent")]
    Inconsistent,

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, bound: usize, actual: usize) -> Self {
        Error::Capacity {
            what,
            bound,
            actual,
        }
    }
}
