use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("hyperplane {index} has a zero coefficient vector")]
    ZeroForm { index: usize },
    #[error("arrangement is not essential: rank {rank} < ambient dimension {ambient}")]
    NotEssential { rank: usize, ambient: usize },
    #[error("{value} is not prime")]
    NotPrime { value: u64 },
    #[error("expected {expected} weights, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("target rank {target} must be smaller than the arrangement rank {rank}")]
    SectionRank { target: usize, rank: usize },
    #[error("coefficient rings differ: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("too many hyperplanes: {0} (at most 62 supported)")]
    TooLarge(usize),
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
