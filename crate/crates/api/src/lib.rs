//! HTTP boundary of the knowledge space framework.
//!
//! | Method & path                         | Purpose                                  |
//! |---------------------------------------|------------------------------------------|
//! | `GET /api/knowstates?topic=`          | search knowledge states by topic         |
//! | `GET /api/learners?name=`             | retrieve learners by name                |
//! | `POST /api/nodes`                     | create a node `{label, attrs}`           |
//! | `GET/PATCH/DELETE /api/nodes/{id}`    | read, merge attrs, delete (cascading)    |
//! | `GET /api/nodes/{id}/neighbors`       | `?direction=out\|in\|both&type=PRECEDES`   |
//! | `POST /api/edges`                     | create `{type, source, target, attrs}`   |
//! | `GET/DELETE /api/edges/{id}`          | read or delete an edge                   |
//! | `GET /api/graph?labels=`              | canonical graph document                 |
//! | `GET /api/kst/report`                 | validation of the derived structure      |
//! | `GET /api/kst/fringes?state=`         | inner/outer fringe of a state            |
//! | `GET /api/kst/paths?limit=`           | learning paths                           |
//! | `POST /api/assessments`               | start an adaptive assessment             |
//! | `POST /api/assessments/{id}/answers`  | answer `{item, correct}`                 |
//! | `GET /api/assessments/{id}`           | full session                             |
//!
//! Every non-2xx response carries an [`ApiError`] body.

mod assessment_routes;
mod error;
mod extract;
mod kst_routes;
mod state;
mod store_routes;

use std::path::PathBuf;

use axum::http::StatusCode;
use axum::routing::{get, post};
use axum::Router;
use tower_http::services::ServeDir;

pub use assessment_routes::{HistoryEntry, SessionView};
pub use error::{ApiError, ApiResult};
pub use kst_routes::DEFAULT_PATH_LIMIT;
pub use state::AppState;

async fn unknown_route() -> ApiError {
    ApiError::not_found("no such endpoint")
}

async fn wrong_method() -> ApiError {
    ApiError::new(StatusCode::METHOD_NOT_ALLOWED, "MethodNotAllowed", "method not allowed on this endpoint")
}

fn api_routes() -> Router<AppState> {
    Router::new()
        .route("/knowstates", get(store_routes::search_knowstates))
        .route("/learners", get(store_routes::search_learners))
        .route("/nodes", post(store_routes::create_node))
        .route(
            "/nodes/{id}",
            get(store_routes::get_node)
                .patch(store_routes::update_node)
                .delete(store_routes::delete_node),
        )
        .route("/nodes/{id}/neighbors", get(store_routes::neighbors))
        .route("/edges", post(store_routes::create_edge))
        .route("/edges/{id}", get(store_routes::get_edge).delete(store_routes::delete_edge))
        .route("/graph", get(store_routes::export_graph))
        .route("/kst/report", get(kst_routes::report))
        .route("/kst/fringes", get(kst_routes::fringes))
        .route("/kst/paths", get(kst_routes::paths))
        .route("/assessments", post(assessment_routes::start))
        .route("/assessments/{id}", get(assessment_routes::get))
        .route("/assessments/{id}/answers", post(assessment_routes::answer))
        .fallback(unknown_route)
        .method_not_allowed_fallback(wrong_method)
}

/// The API under `/api`, with nothing else mounted.
pub fn router(state: AppState) -> Router {
    Router::new()
        .nest("/api", api_routes())
        .fallback(unknown_route)
        .with_state(state)
}

/// The API plus static client assets served from `assets` for every other path.
pub fn router_with_assets(state: AppState, assets: PathBuf) -> Router {
    Router::new()
        .nest("/api", api_routes())
        .fallback_service(ServeDir::new(assets))
        .with_state(state)
}
