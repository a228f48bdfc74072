use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring spec `{0}`")]
    InvalidSpec(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid modulus polynomial: {0}")]
    InvalidModulus(String),
    #[error("{what} of {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("moduli {m} and {n} are not coprime")]
    NotCoprime { m: u64, n: u64 },
    #[error("matrix is central and has no class")]
    CentralMatrix,
    #[error("matrix is not in canonical form (bottom-right entry must be zero)")]
    NotCanonical,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("class tag mismatch: {0}")]
    TagMismatch(String),
    #[error("non-integral value in {0}")]
    NonIntegral(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
