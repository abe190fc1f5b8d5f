use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("missing `d <modulus>` header")]
    MissingModulus,

    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i128),

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("label {label} out of range for modulus {modulus}")]
    LabelOutOfRange { label: u64, modulus: u64 },

    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),

    #[error("edge {0} is unlabeled")]
    UnlabeledEdge(usize),

    #[error("odd closed walk requires an even modulus, got d = {0}")]
    OddWalkOddModulus(u64),

    #[error("invalid closed walk: {0}")]
    InvalidWalk(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
