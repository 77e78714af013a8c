use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StoreError {
    #[error("`{0}` not found")]
    NotFound(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("invalid edge type `{0}`")]
    InvalidEdgeType(String),
    #[error("attribute `{attr}`: {reason}")]
    SchemaViolation { attr: String, reason: String },
    #[error("{0}")]
    TypeConstraintViolation(String),
    #[error("PRECEDES {src} -> {dst} would close a cycle")]
    CycleDetected { src: String, dst: String },
    #[error("i/o failure: {0}")]
    IoFailure(String),
    #[error("corrupt snapshot: {0}")]
    CorruptSnapshot(String),
}

impl StoreError {
    pub fn code(&self) -> &'static str {
        match self {
            StoreError::NotFound(_) => "NotFound",
            StoreError::InvalidLabel(_) => "InvalidLabel",
            StoreError::InvalidEdgeType(_) => "InvalidEdgeType",
            StoreError::SchemaViolation { .. } => "SchemaViolation",
            StoreError::TypeConstraintViolation(_) => "TypeConstraintViolation",
            StoreError::CycleDetected { .. } => "CycleDetected",
            StoreError::IoFailure(_) => "IoFailure",
            StoreError::CorruptSnapshot(_) => "CorruptSnapshot",
        }
    }
}

pub type StoreResult<T> = Result<T, StoreError>;
