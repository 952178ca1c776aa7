use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("parameter mismatch: ({r1},{n1}) vs ({r2},{n2})")]
    ParamMismatch { r1: u32, n1: usize, r2: u32, n2: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid residue tuple: {0}")]
    InvalidTuple(String),
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("enumeration guard exceeded: {what} needs {needed}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        needed: usize,
        limit: usize,
    },
    #[error("generator s{0} is not in the Young subgroup")]
    NotInYoungSubgroup(usize),
    #[error("triple not in C: {0}")]
    NotInC(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("incompatible form: {0}")]
    Incompatible(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
