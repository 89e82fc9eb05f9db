use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph must be connected: {0}")]
    Disconnected(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid covering map: {0}")]
    InvalidCovering(String),

    #[error("strategy precondition violated: {0}")]
    StrategyPrecondition(String),

    #[error("illegal move by {side}: {detail}")]
    IllegalMove { side: &'static str, detail: String },

    #[error("state not present in solve table: {0}")]
    UnknownState(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
