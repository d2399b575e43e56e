use thiserror::Error;

/// Errors raised by the automata, pumping and witness routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },
    #[error("state {state} out of range (automaton has {states} states)")]
    InvalidState { state: usize, states: usize },
    #[error("index error: {0}")]
    Index(String),
    #[error("the pumped word y must be non-empty")]
    EmptyPump,
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("regex syntax error at {position}: {message}")]
    Regex { position: usize, message: String },
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("construction self-check failed for {family}: expected {expected:?}, computed {computed:?}")]
    WitnessMismatch {
        family: String,
        expected: Vec<usize>,
        computed: Vec<usize>,
    },
    #[error("continuation search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: usize },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
