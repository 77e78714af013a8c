use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use ksf_core::kst::KstError;
use ksf_core::store::StoreError;
use serde::{Deserialize, Serialize};

/// Body of every non-2xx response.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub status: u16,
    pub code: String,
    pub message: String,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        ApiError {
            status: status.as_u16(),
            code: code.to_string(),
            message: message.into(),
        }
    }

    pub fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "BadRequest", message)
    }

    pub fn not_found(message: impl Into<String>) -> Self {
        Self::new(StatusCode::NOT_FOUND, "NotFound", message)
    }

    pub fn empty_domain() -> Self {
        Self::new(StatusCode::CONFLICT, "EmptyDomain", "the store holds no KnowState nodes")
    }
}

impl From<StoreError> for ApiError {
    fn from(e: StoreError) -> Self {
        let status = match e {
            StoreError::NotFound(_) => StatusCode::NOT_FOUND,
            StoreError::InvalidLabel(_)
            | StoreError::InvalidEdgeType(_)
            | StoreError::SchemaViolation { .. }
            | StoreError::TypeConstraintViolation(_) => StatusCode::UNPROCESSABLE_ENTITY,
            StoreError::CycleDetected { .. } => StatusCode::CONFLICT,
            StoreError::IoFailure(_) | StoreError::CorruptSnapshot(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError::new(status, e.code(), e.to_string())
    }
}

impl From<KstError> for ApiError {
    fn from(e: KstError) -> Self {
        let status = match e {
            KstError::UnknownItem(_) => StatusCode::NOT_FOUND,
            KstError::StateNotInStructure => StatusCode::UNPROCESSABLE_ENTITY,
            KstError::InvalidLimit | KstError::InvalidCap => StatusCode::BAD_REQUEST,
            KstError::EmptyDomain
            | KstError::TooManyStates { .. }
            | KstError::MissingEndpoints
            | KstError::NoPath
            | KstError::ItemAlreadyAsked(_)
            | KstError::WouldEmptyCandidates(_)
            | KstError::UninformativeItem(_) => StatusCode::CONFLICT,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError::new(status, e.code(), e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self)).into_response()
    }
}

pub type ApiResult<T> = Result<T, ApiError>;
