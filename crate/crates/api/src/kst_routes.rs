//! Knowledge-space analysis of the stored prerequisite graph.

use axum::extract::State;
use axum::Json;
use ksf_core::kst::{inner_fringe, learning_paths, outer_fringe, validate_structure, ValidationReport};
use serde::Serialize;

use crate::error::{ApiError, ApiResult};
use crate::extract::{id_list, params, Params};
use crate::state::AppState;

pub const DEFAULT_PATH_LIMIT: usize = 100;

#[derive(Debug, Serialize)]
pub struct StructureReport {
    #[serde(flatten)]
    pub validation: ValidationReport,
    pub state_count: usize,
    pub domain_size: usize,
}

#[derive(Debug, Serialize)]
pub struct Fringes {
    pub state: Vec<String>,
    pub inner: Vec<String>,
    pub outer: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Paths {
    /// Each path lists its states, each state as its sorted ids.
    pub paths: Vec<Vec<Vec<String>>>,
    pub truncated: bool,
}

pub async fn report(State(state): State<AppState>) -> ApiResult<Json<StructureReport>> {
    let structure = state.structure()?;
    Ok(Json(StructureReport {
        validation: validate_structure(&structure),
        state_count: structure.len(),
        domain_size: structure.domain().len(),
    }))
}

pub async fn fringes(State(state): State<AppState>, raw: Params) -> ApiResult<Json<Fringes>> {
    let params = params(raw)?;
    let ids = id_list(
        params
            .get("state")
            .ok_or_else(|| ApiError::bad_request("missing `state` parameter"))?,
    );
    let structure = state.structure()?;
    let domain = structure.domain();
    let current = domain.state(&ids)?;
    let inner = inner_fringe(&current, &structure)?;
    let outer = outer_fringe(&current, &structure)?;
    Ok(Json(Fringes {
        state: domain.id_vec(&current),
        inner: domain.id_vec(&inner),
        outer: domain.id_vec(&outer),
    }))
}

pub async fn paths(State(state): State<AppState>, raw: Params) -> ApiResult<Json<Paths>> {
    let params = params(raw)?;
    let limit = match params.get("limit") {
        None => DEFAULT_PATH_LIMIT,
        Some(raw) => raw
            .parse::<usize>()
            .map_err(|_| ApiError::bad_request(format!("limit must be a positive integer, got `{raw}`")))?,
    };
    let structure = state.structure()?;
    let found = learning_paths(&structure, limit)?;
    let domain = structure.domain();
    Ok(Json(Paths {
        paths: found
            .paths
            .iter()
            .map(|p| p.steps.iter().map(|s| domain.id_vec(s)).collect())
            .collect(),
        truncated: found.truncated,
    }))
}
