use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit exceeded: {what} needs {required}, limit is {limit}")]
    ResourceLimit {
        what: String,
        required: u128,
        limit: u128,
    },

    /// Two characteristic vectors share a 1 at `one_at` and a 0 at `zero_at`,
    /// so the source system covers edge (`zero_at`, `one_at`) twice.
    #[error(
        "ill-defined adjacency between bicliques {first} and {second}: \
         shared 1 at vertex {one_at}, shared 0 at vertex {zero_at}"
    )]
    WellDefinedness {
        first: usize,
        second: usize,
        one_at: usize,
        zero_at: usize,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn limit(what: impl Into<String>, required: u128, limit: u128) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            required,
            limit,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
