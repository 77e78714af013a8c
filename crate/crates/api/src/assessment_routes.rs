//! Adaptive assessment sessions, held in memory.

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::IntoResponse;
use axum::Json;
use ksf_core::kst::{assessment_answer, assessment_next_item, assessment_start, AssessmentSession, NextStep};
use serde::{Deserialize, Serialize};

use crate::error::{ApiError, ApiResult};
use crate::extract::json_body;
use crate::state::AppState;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AnswerRequest {
    item: String,
    correct: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub item: String,
    pub correct: bool,
}

/// Where a session stands after its latest answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    /// "in_progress", "converged" or "ambiguous".
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub next_item: Option<String>,
    /// The identified state, once converged.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<Vec<String>>,
    pub candidates_remaining: usize,
    /// Remaining candidates; always present in full session reads and in ambiguous results.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub history: Option<Vec<HistoryEntry>>,
}

fn view(id: &str, session: &AssessmentSession, full: bool) -> SessionView {
    let domain = session.structure().domain();
    let all_candidates = || session.candidates().map(|s| domain.id_vec(s)).collect::<Vec<_>>();
    let mut out = SessionView {
        id: id.to_string(),
        status: "in_progress".into(),
        next_item: None,
        state: None,
        candidates_remaining: session.candidate_count(),
        candidates: None,
        history: None,
    };
    match assessment_next_item(session) {
        NextStep::Ask(item) => out.next_item = Some(item.to_string()),
        NextStep::Converged(found) => {
            out.status = "converged".into();
            out.state = Some(domain.id_vec(&found));
        }
        NextStep::Ambiguous(_) => {
            out.status = "ambiguous".into();
            out.candidates = Some(all_candidates());
        }
    }
    if full {
        out.candidates = Some(all_candidates());
        out.history = Some(
            session
                .history()
                .iter()
                .map(|a| HistoryEntry {
                    item: domain.item(a.item).to_string(),
                    correct: a.correct,
                })
                .collect(),
        );
    }
    out
}

pub async fn start(State(state): State<AppState>) -> ApiResult<impl IntoResponse> {
    let structure = state.structure()?;
    let session = assessment_start(structure);
    let mut sessions = state.sessions();
    let id = sessions.insert(session);
    Ok((StatusCode::CREATED, Json(view(&id, &sessions.open[&id], false))))
}

pub async fn answer(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> ApiResult<Json<SessionView>> {
    let req: AnswerRequest = json_body(&body)?;
    let mut sessions = state.sessions();
    let current = sessions
        .open
        .get(&id)
        .ok_or_else(|| ApiError::not_found(format!("no assessment session `{id}`")))?;
    let next = assessment_answer(current, &req.item, req.correct)?;
    let out = view(&id, &next, false);
    sessions.open.insert(id, next);
    Ok(Json(out))
}

pub async fn get(State(state): State<AppState>, Path(id): Path<String>) -> ApiResult<Json<SessionView>> {
    let sessions = state.sessions();
    let session = sessions
        .open
        .get(&id)
        .ok_or_else(|| ApiError::not_found(format!("no assessment session `{id}`")))?;
    Ok(Json(view(&id, session, true)))
}
