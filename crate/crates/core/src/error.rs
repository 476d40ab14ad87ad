use thiserror::Error;

/// Errors raised by world construction, information computations, channel
/// modelling, code synthesis and region search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty outcome set")]
    EmptyOutcomes,
    #[error("outcome has {found} symbols but {expected} variables are declared")]
    ArityMismatch { expected: usize, found: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("empty variable name")]
    EmptyVariableName,
    #[error("empty symbol token")]
    EmptySymbol,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable subsets overlap on `{0}`")]
    OverlappingSubsets(String),
    #[error("empty variable subset")]
    EmptySubset,
    #[error("inadmissible condition {0}")]
    InadmissibleCondition(String),
    #[error("at least {expected} groups required, got {found}")]
    TooFewGroups { expected: usize, found: usize },
    #[error("partitions are over different ground sets")]
    GroundMismatch,
    #[error("common variables are defined over different domains")]
    DomainMismatch,

    #[error("duplicate symbol `{symbol}` in alphabet {alphabet}")]
    DuplicateSymbol { alphabet: &'static str, symbol: String },
    #[error("empty alphabet {0}")]
    EmptyAlphabet(&'static str),
    #[error("unknown symbol `{symbol}` for alphabet {alphabet}")]
    UnknownSymbol { alphabet: &'static str, symbol: String },
    #[error("missing transition for input (x1={x1}, x2={x2}, w={w})")]
    MissingTransition { x1: String, x2: String, w: String },
    #[error("duplicate transition for input (x1={x1}, x2={x2}, w={w})")]
    DuplicateTransition { x1: String, x2: String, w: String },
    #[error("invalid message specification: {0}")]
    InvalidMessageSpec(String),
    #[error("invalid cooperation structure: {0}")]
    InvalidStructure(String),
    #[error("code does not match channel or message specification: {0}")]
    CodeMismatch(String),
    #[error("world would have {outcomes} outcomes, above the cap of {cap}")]
    WorldTooLarge { outcomes: u128, cap: usize },

    #[error("inadmissible output sequence {0}")]
    InadmissibleOutput(String),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("search budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("{0}")]
    Unsupported(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

/// Coarse failure classes, used by front ends to pick exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Budget,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BudgetExceeded { .. } | Error::WorldTooLarge { .. } => ErrorKind::Budget,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
