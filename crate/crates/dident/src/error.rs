use thiserror::Error;

/// Error raised while parsing text input (formulas, cycle notation,
/// construction expressions). `column` is 1-based and clamped to the
/// input length, so errors at end-of-input point at the last column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {column}: {message}")]
pub struct ParseError {
    pub message: String,
    pub column: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, column: usize) -> Self {
        ParseError { message: message.into(), column: column.max(1) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("permutation degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("group construction exceeds size bound {bound}")]
    SizeBound { bound: usize },

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },

    #[error("invalid group table: {0}")]
    BadTable(String),

    #[error("semidirect action is not an automorphism: {0}")]
    BadAction(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("unknown formula `{0}`")]
    UnknownFormula(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("formula `{id}` needs parameters: {missing}")]
    MissingParams { id: String, missing: String },

    #[error("unassigned variable x{0}")]
    UnassignedVariable(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {p} divides the group order {order}; only the ordinary case is supported")]
    ModularCharacteristic { p: u64, order: usize },

    #[error("element `{0}` not found in group")]
    NoSuchElement(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
