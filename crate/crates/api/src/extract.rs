//! Request parsing that reports failures as [`ApiError`] bodies.

use std::collections::HashMap;

use axum::body::Bytes;
use axum::extract::rejection::QueryRejection;
use axum::extract::Query;
use serde::de::DeserializeOwned;

use crate::error::{ApiError, ApiResult};

pub type Params = Result<Query<HashMap<String, String>>, QueryRejection>;

pub fn params(raw: Params) -> ApiResult<HashMap<String, String>> {
    raw.map(|Query(map)| map)
        .map_err(|e| ApiError::bad_request(e.body_text()))
}

pub fn json_body<T: DeserializeOwned>(body: &Bytes) -> ApiResult<T> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed body: {e}")))
}

/// Splits a comma-separated id list, dropping blanks and duplicates.
pub fn id_list(raw: &str) -> Vec<String> {
    let mut ids: Vec<String> = raw
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    ids.sort();
    ids.dedup();
    ids
}
