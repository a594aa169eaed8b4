use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("token {position} (`{token}`): {reason}")]
    Parse { position: usize, token: String, reason: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
    #[error("letter {0} is not a vertex of the commutation graph")]
    NotAVertex(String),
    #[error("search budget exceeded after {nodes} nodes ({found} results so far); result would be partial")]
    BudgetExceeded { nodes: u64, found: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
