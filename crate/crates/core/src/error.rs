use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts do not partition the vertex set")]
    NotAPartition,

    #[error("part {part} does not induce a connected subgraph")]
    PartNotConnected { part: usize },

    #[error("vertex set is not connected")]
    NotConnected,

    #[error("graph is not connected")]
    Disconnected,

    #[error("set is not a key of the table")]
    KeyAbsent,

    #[error("terminal sets overlap")]
    TerminalsOverlap,

    #[error("terminal set is empty")]
    EmptyTerminal,

    #[error("not a valid solution tri-partition")]
    InvalidSolution,

    #[error("value {0} outside the open interval (0, 1)")]
    DomainError(String),

    #[error("{what} exceeds capacity {limit}")]
    CapacityExceeded { what: &'static str, limit: usize },

    #[error("invalid fraction: {0}")]
    InvalidFraction(String),

    #[error("invalid constants: {0}")]
    InvalidConstants(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
