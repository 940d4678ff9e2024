use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },

    #[error("literal references variable {var} but the formula has {vars} variables")]
    VariableOutOfRange { var: usize, vars: usize },

    #[error("block labels are not a surjection onto 0..{blocks}: {reason}")]
    InvalidBlockAssignment { blocks: usize, reason: String },

    /// A precondition of an algorithm was not met by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("instance of size {size} exceeds the brute-force limit of {limit}")]
    OracleLimit { size: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
