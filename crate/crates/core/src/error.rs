use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid increasing tree: {0}")]
    InvalidTree(String),

    #[error("pattern parse error at position {position}: {message}")]
    PatternParse { position: usize, message: String },

    #[error("{what} = {value} is out of range (maximum {max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("{map}: input outside the domain: {reason}")]
    Domain { map: &'static str, reason: String },

    #[error("unknown sequence name `{0}`")]
    UnknownSequence(String),

    #[error("continued fraction depth {depth} is too shallow for {n_max} exact coefficients (need at least {needed})")]
    Precision {
        n_max: usize,
        depth: usize,
        needed: usize,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid {kind}: {message}")]
    Parse { kind: &'static str, message: String },

    #[error("sequence identification needs at least {needed} terms, got {got}")]
    TooFewTerms { needed: usize, got: usize },
}

impl Error {
    pub(crate) fn domain(map: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            map,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(kind: &'static str, message: impl Into<String>) -> Self {
        Error::Parse {
            kind,
            message: message.into(),
        }
    }
}
