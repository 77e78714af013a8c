use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock, RwLockReadGuard, RwLockWriteGuard};

use ksf_core::kst::{states_from_precedence, AssessmentSession, KnowledgeStructure, DEFAULT_STATE_CAP};
use ksf_core::store::PropertyGraph;

use crate::error::{ApiError, ApiResult};

/// Shared service state: the store behind a single-writer lock, the derived
/// structure cache, and in-memory assessment sessions.
#[derive(Clone)]
pub struct AppState {
    inner: Arc<Inner>,
}

struct Inner {
    store: RwLock<PropertyGraph>,
    derived: Mutex<Option<(u64, Arc<KnowledgeStructure>)>>,
    sessions: Mutex<Sessions>,
    cap: usize,
}

#[derive(Default)]
pub(crate) struct Sessions {
    next: u64,
    pub(crate) open: HashMap<String, AssessmentSession>,
}

impl Sessions {
    pub(crate) fn insert(&mut self, session: AssessmentSession) -> String {
        self.next += 1;
        let id = format!("a{}", self.next);
        self.open.insert(id.clone(), session);
        id
    }
}

impl AppState {
    pub fn new(graph: PropertyGraph, cap: usize) -> Self {
        AppState {
            inner: Arc::new(Inner {
                store: RwLock::new(graph),
                derived: Mutex::new(None),
                sessions: Mutex::new(Sessions::default()),
                cap: cap.max(1),
            }),
        }
    }

    pub fn cap(&self) -> usize {
        self.inner.cap
    }

    pub fn read(&self) -> RwLockReadGuard<'_, PropertyGraph> {
        self.inner.store.read().unwrap_or_else(|e| e.into_inner())
    }

    pub fn write(&self) -> RwLockWriteGuard<'_, PropertyGraph> {
        self.inner.store.write().unwrap_or_else(|e| e.into_inner())
    }

    /// A copy of the current store, e.g. for saving a snapshot.
    pub fn snapshot(&self) -> PropertyGraph {
        self.read().clone()
    }

    pub(crate) fn sessions(&self) -> std::sync::MutexGuard<'_, Sessions> {
        self.inner.sessions.lock().unwrap_or_else(|e| e.into_inner())
    }

    /// The down-set family of the stored prerequisites, recomputed whenever
    /// the store revision moved since the last call.
    pub fn structure(&self) -> ApiResult<Arc<KnowledgeStructure>> {
        let store = self.read();
        let revision = store.revision();
        let mut cache = self.inner.derived.lock().unwrap_or_else(|e| e.into_inner());
        if let Some((seen, structure)) = cache.as_ref() {
            if *seen == revision {
                return Ok(Arc::clone(structure));
            }
        }
        let relation = store.precedence_view().ok_or_else(ApiError::empty_domain)?;
        let structure = Arc::new(states_from_precedence(&relation, self.inner.cap)?);
        *cache = Some((revision, Arc::clone(&structure)));
        Ok(structure)
    }
}

impl Default for AppState {
    fn default() -> Self {
        AppState::new(PropertyGraph::new(), DEFAULT_STATE_CAP)
    }
}
