//! In-process HTTP client and store fixtures for the API tests.
#![allow(dead_code)]

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use ksf_api::{router, AppState};
use ksf_core::kst::DEFAULT_STATE_CAP;
use ksf_core::store::{AttrValue, Attrs, EdgeType, Label, PropertyGraph};
use serde_json::Value;
use tower::ServiceExt;

pub struct Reply {
    pub status: StatusCode,
    pub text: String,
    pub json: Value,
}

/// Sends one request. Any non-2xx reply must carry an ApiError body whose
/// `status` field matches the HTTP status.
pub async fn call(app: &Router, method: Method, uri: &str, body: Option<Value>) -> Reply {
    let request = Request::builder().method(method).uri(uri);
    let request = match body {
        Some(v) => request
            .header("content-type", "application/json")
            .body(Body::from(v.to_string())),
        None => request.body(Body::empty()),
    }
    .unwrap();
    raw(app, request).await
}

pub async fn raw(app: &Router, request: Request<Body>) -> Reply {
    let response = app.clone().oneshot(request).await.unwrap();
    let status = response.status();
    let bytes = response.into_body().collect().await.unwrap().to_bytes();
    let text = String::from_utf8(bytes.to_vec()).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    if !status.is_success() {
        let keys: Vec<&String> = json.as_object().expect("error body is an object").keys().collect();
        assert_eq!(keys, ["code", "message", "status"], "error body shape: {text}");
        assert_eq!(json["status"], status.as_u16(), "error status field: {text}");
    }
    Reply { status, text, json }
}

pub async fn get(app: &Router, uri: &str) -> Reply {
    call(app, Method::GET, uri, None).await
}

pub async fn post(app: &Router, uri: &str, body: Value) -> Reply {
    call(app, Method::POST, uri, Some(body)).await
}

pub fn attrs(pairs: &[(&str, AttrValue)]) -> Attrs {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub fn app(graph: PropertyGraph) -> Router {
    router(AppState::new(graph, DEFAULT_STATE_CAP))
}

/// Three knowledge states n1 → n2 → n3.
pub fn chain() -> PropertyGraph {
    let mut g = PropertyGraph::new();
    for title in ["Counting", "Addition", "Multiplication"] {
        g.create_node(Label::KnowState, attrs(&[("title", title.into()), ("topic", "Arithmetic".into())]))
            .unwrap();
    }
    g.create_edge(EdgeType::Precedes, "n1", "n2", attrs(&[("weight", 0.9.into())])).unwrap();
    g.create_edge(EdgeType::Precedes, "n2", "n3", Attrs::new()).unwrap();
    g
}

/// Knowledge states with topics "Algebra I", "Linear Algebra", "Geometry".
pub fn topics() -> PropertyGraph {
    let mut g = PropertyGraph::new();
    for t in ["Algebra I", "Linear Algebra", "Geometry"] {
        g.create_node(Label::KnowState, attrs(&[("topic", t.into()), ("title", t.into())]))
            .unwrap();
    }
    g
}

/// Learners "Ada", "Adam" (students) and "Bo" (instructor).
pub fn learners() -> PropertyGraph {
    let mut g = PropertyGraph::new();
    for (name, role) in [("Ada", "student"), ("Adam", "student"), ("Bo", "instructor")] {
        g.create_node(Label::Learner, attrs(&[("name", name.into()), ("role", role.into())]))
            .unwrap();
    }
    g
}

/// `n` KnowState nodes without prerequisites.
pub fn antichain(n: usize) -> PropertyGraph {
    let mut g = PropertyGraph::new();
    for _ in 0..n {
        g.create_node(Label::KnowState, Attrs::new()).unwrap();
    }
    g
}

pub fn ids(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|n| n["id"].as_str().unwrap().to_string())
        .collect()
}
