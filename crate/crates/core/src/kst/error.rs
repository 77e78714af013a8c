use thiserror::Error;

/// Errors raised by the knowledge-space algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KstError {
    #[error("domain must contain at least one item")]
    EmptyDomain,
    #[error("item ids must be non-empty")]
    EmptyItemId,
    #[error("duplicate item id `{0}`")]
    DuplicateItem(String),
    #[error("unknown item `{0}`")]
    UnknownItem(String),
    #[error("state width {found} does not match domain size {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("state is not a member of the structure")]
    StateNotInStructure,
    #[error("structure has at least {count_estimate} states, over the cap of {cap}")]
    TooManyStates { count_estimate: usize, cap: usize },
    #[error("cap must be at least 1")]
    InvalidCap,
    #[error("precedence pairs contain a cycle through `{0}`")]
    CyclicPrecedence(String),
    #[error("no state contains item `{0}`")]
    ItemNeverPresent(String),
    #[error("items `{0}` and `{1}` are indistinguishable; the surmise relation is not a partial order")]
    NotAPartialOrder(String, String),
    #[error("structure must contain both the empty state and the full domain")]
    MissingEndpoints,
    #[error("no learning path leads from the empty state to the full domain")]
    NoPath,
    #[error("limit must be at least 1")]
    InvalidLimit,
    #[error("item `{0}` was already asked")]
    ItemAlreadyAsked(String),
    #[error("answer for `{0}` is inconsistent with every remaining candidate")]
    WouldEmptyCandidates(String),
    #[error("item `{0}` does not split the remaining candidates")]
    UninformativeItem(String),
}

impl KstError {
    /// Stable machine-readable name, used as the `code` of API errors.
    pub fn code(&self) -> &'static str {
        match self {
            KstError::EmptyDomain => "EmptyDomain",
            KstError::EmptyItemId => "EmptyItemId",
            KstError::DuplicateItem(_) => "DuplicateItem",
            KstError::UnknownItem(_) => "UnknownItem",
            KstError::WidthMismatch { .. } => "WidthMismatch",
            KstError::StateNotInStructure => "StateNotInStructure",
            KstError::TooManyStates { .. } => "TooManyStates",
            KstError::InvalidCap => "InvalidCap",
            KstError::CyclicPrecedence(_) => "CyclicPrecedence",
            KstError::ItemNeverPresent(_) => "ItemNeverPresent",
            KstError::NotAPartialOrder(..) => "NotAPartialOrder",
            KstError::MissingEndpoints => "MissingEndpoints",
            KstError::NoPath => "NoPath",
            KstError::InvalidLimit => "InvalidLimit",
            KstError::ItemAlreadyAsked(_) => "ItemAlreadyAsked",
            KstError::WouldEmptyCandidates(_) => "WouldEmptyCandidates",
            KstError::UninformativeItem(_) => "UninformativeItem",
        }
    }
}

pub type KstResult<T> = Result<T, KstError>;
