use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring `{spec}`: {reason}")]
    RingSpec { spec: String, reason: String },

    #[error("scalar does not belong to {ring}")]
    RingMismatch { ring: String },

    #[error("length mismatch: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },

    #[error("{op} requires a field, got {ring}")]
    NotAField { op: &'static str, ring: String },

    #[error("{op} is not supported over {ring}")]
    Unsupported { op: &'static str, ring: String },

    #[error("invalid matroid: {0}")]
    Matroid(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("not a resonant pair")]
    NotResonant,

    #[error("hypothesis fails: {0}")]
    Hypothesis(String),

    #[error("weight is not in K(Γ)")]
    NotInK,

    #[error("search space of {size} exceeds cap {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("no generic partner over {field}; |E| > {bound} guarantees one")]
    NoPartner { field: String, bound: u64 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
