use thiserror::Error;

/// Errors produced by construction, decoding, I/O, and simulation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("infeasible construction: {0}")]
    Construction(String),

    #[error("dependent parity rows: rank {rank} over GF(2), expected {rows}")]
    DependentRows { rank: usize, rows: usize },

    #[error("exhaustive search refused: k = {k} exceeds limit {limit}")]
    DimensionTooLarge { k: usize, limit: usize },

    #[error("unsupported geometry: {0}")]
    UnsupportedGeometry(String),

    #[error("vector is not a lattice member")]
    NotAMember,

    #[error("unsupported decoder input: {0}")]
    UnsupportedDecode(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid recipe field `{field}`: {msg}")]
    Recipe { field: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
