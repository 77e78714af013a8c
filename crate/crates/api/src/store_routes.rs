//! Store CRUD, search, navigation and graph export.

use std::collections::BTreeSet;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::IntoResponse;
use axum::Json;
use ksf_core::store::{Attrs, Direction, Edge, EdgeType, Label, Node};
use serde::Deserialize;
use serde_json::json;

use crate::error::{ApiError, ApiResult};
use crate::extract::{id_list, json_body, params, Params};
use crate::state::AppState;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NewNode {
    label: String,
    #[serde(default)]
    attrs: Attrs,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NodePatch {
    attrs: Attrs,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NewEdge {
    #[serde(rename = "type")]
    edge_type: String,
    source: String,
    target: String,
    #[serde(default)]
    attrs: Attrs,
}

fn search(state: &AppState, label: Label, attr: &str, raw: Params) -> ApiResult<Json<Vec<Node>>> {
    let params = params(raw)?;
    let pattern = params.get(attr).map(String::as_str).unwrap_or("");
    let store = state.read();
    let found = store.find_nodes(Some(label), attr, pattern)?;
    Ok(Json(found.into_iter().cloned().collect()))
}

pub async fn search_knowstates(State(state): State<AppState>, raw: Params) -> ApiResult<Json<Vec<Node>>> {
    search(&state, Label::KnowState, "topic", raw)
}

pub async fn search_learners(State(state): State<AppState>, raw: Params) -> ApiResult<Json<Vec<Node>>> {
    search(&state, Label::Learner, "name", raw)
}

pub async fn create_node(State(state): State<AppState>, body: Bytes) -> ApiResult<impl IntoResponse> {
    let req: NewNode = json_body(&body)?;
    let label: Label = req.label.parse()?;
    let mut store = state.write();
    let id = store.create_node(label, req.attrs)?;
    tracing::debug!(%id, %label, "node created");
    Ok((StatusCode::CREATED, Json(store.get_node(&id)?.clone())))
}

pub async fn get_node(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<Node>> {
    Ok(Json(state.read().get_node(&id)?.clone()))
}

pub async fn update_node(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> ApiResult<Json<Node>> {
    let req: NodePatch = json_body(&body)?;
    let mut store = state.write();
    Ok(Json(store.update_node(&id, req.attrs)?.clone()))
}

pub async fn delete_node(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<serde_json::Value>> {
    let removed = state.write().delete_node(&id)?;
    Ok(Json(json!({ "removed_edges": removed })))
}

pub async fn neighbors(
    State(state): State<AppState>,
    Path(id): Path<String>,
    raw: Params,
) -> ApiResult<Json<Vec<Node>>> {
    let params = params(raw)?;
    let direction: Direction = params
        .get("direction")
        .map(|d| d.parse())
        .transpose()
        .map_err(ApiError::bad_request)?
        .unwrap_or(Direction::Both);
    let edge_type: Option<EdgeType> = params
        .get("type")
        .map(|t| t.parse())
        .transpose()
        .map_err(|e: ksf_core::store::StoreError| ApiError::bad_request(e.to_string()))?;
    let store = state.read();
    let found = store.neighbors(&id, direction, edge_type)?;
    Ok(Json(found.into_iter().cloned().collect()))
}

pub async fn create_edge(State(state): State<AppState>, body: Bytes) -> ApiResult<impl IntoResponse> {
    let req: NewEdge = json_body(&body)?;
    let edge_type: EdgeType = req.edge_type.parse()?;
    let mut store = state.write();
    let id = store.create_edge(edge_type, &req.source, &req.target, req.attrs)?;
    Ok((StatusCode::CREATED, Json(store.get_edge(&id)?.clone())))
}

pub async fn get_edge(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<Edge>> {
    Ok(Json(state.read().get_edge(&id)?.clone()))
}

pub async fn delete_edge(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<Edge>> {
    Ok(Json(state.write().delete_edge(&id)?))
}

/// The canonical graph document, byte-for-byte what a snapshot of the same store holds.
pub async fn export_graph(State(state): State<AppState>, raw: Params) -> ApiResult<impl IntoResponse> {
    let params = params(raw)?;
    let filter = match params.get("labels") {
        None => None,
        Some(csv) => Some(
            id_list(csv)
                .iter()
                .map(|l| l.parse::<Label>().map_err(|e| ApiError::bad_request(e.to_string())))
                .collect::<ApiResult<BTreeSet<Label>>>()?,
        ),
    };
    let body = state.read().export_graph(filter.as_ref()).to_canonical_json();
    Ok(([(header::CONTENT_TYPE, "application/json")], body))
}
