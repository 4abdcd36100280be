use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// The variant name (see [`Error::name`]) is the stable identifier surfaced
/// by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0 is not a natural number here")]
    ZeroNotNatural,

    #[error("cannot parse {input:?} as a natural number")]
    InvalidNatural { input: String },

    #[error("{value} exceeds the factorization ceiling {ceiling}")]
    FactorizationLimit { value: String, ceiling: String },

    #[error("{key} is not prime")]
    NotPrime { key: u64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{bottom} does not divide {top}")]
    InvalidInterval { bottom: String, top: String },

    #[error("{value} is not a member of Q[{bottom},{top}]")]
    NotMember {
        value: String,
        bottom: String,
        top: String,
    },

    #[error("interval has {count} elements, above the cap of {cap}")]
    EnumerationLimit { count: u64, cap: u64 },

    #[error("Q[{bottom},{top}] is not a Boolean algebra")]
    NotBoolean { bottom: String, top: String },

    #[error("no greatest element among the candidates in Q[{bottom},{top}]")]
    NoGreatestElement { bottom: String, top: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("syntax error at position {position}: {message}")]
    SyntaxError { position: usize, message: String },

    #[error("unbound variable {0:?}")]
    UnboundVariable(String),

    #[error("search space of {size} assignments exceeds the cap of {cap}")]
    SearchLimit { size: u128, cap: u64 },
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroNotNatural => "ZeroNotNatural",
            Error::InvalidNatural { .. } => "InvalidNatural",
            Error::FactorizationLimit { .. } => "FactorizationLimit",
            Error::NotPrime { .. } => "NotPrime",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::InvalidInterval { .. } => "InvalidInterval",
            Error::NotMember { .. } => "NotMember",
            Error::EnumerationLimit { .. } => "EnumerationLimit",
            Error::NotBoolean { .. } => "NotBoolean",
            Error::NoGreatestElement { .. } => "NoGreatestElement",
            Error::Internal(_) => "Internal",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::SearchLimit { .. } => "SearchLimit",
        }
    }
}
