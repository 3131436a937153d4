use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration cap exceeded: need {needed} codewords, cap is {cap}")]
    EnumerationCap { needed: u128, cap: u64 },
    #[error("empty search set: code equals the excluded set")]
    EmptySearchSet,
    #[error("code is not trace self-orthogonal")]
    NotSelfOrthogonal,
    #[error("code is not GF(4)-linear")]
    NotLinear,
    #[error("code is not Hermitian self-orthogonal")]
    NotHermitianSelfOrthogonal,
    #[error("matching violated: protector k^b = {kb} < c = {c}")]
    MatchingViolated { kb: usize, c: usize },
    #[error("chain violation: {0}")]
    ChainViolation(String),
    #[error("ACD violation: {0}")]
    AcdViolation(String),
    #[error("dependent generator rows: {0}")]
    DependentRows(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
