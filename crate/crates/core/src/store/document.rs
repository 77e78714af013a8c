//! The graph document: snapshot file format and visualization payload in one.
//!
//! Canonical form is pretty-printed UTF-8 JSON with object keys sorted and
//! nodes/links ordered by id, terminated by a newline. Saving the same store
//! twice yields identical bytes.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::error::{StoreError, StoreResult};
use super::graph::{Edge, Node, PropertyGraph};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: u32,
    pub nodes: Vec<Node>,
    pub links: Vec<Edge>,
}

impl GraphDocument {
    /// Builds a version-1 document, sorting nodes and links by id.
    pub fn new(mut nodes: Vec<Node>, mut links: Vec<Edge>) -> Self {
        nodes.sort_by(|a, b| a.id.cmp(&b.id));
        links.sort_by(|a, b| a.id.cmp(&b.id));
        GraphDocument {
            version: DOCUMENT_VERSION,
            nodes,
            links,
        }
    }

    pub(crate) fn check_version(&self) -> StoreResult<()> {
        if self.version == DOCUMENT_VERSION {
            Ok(())
        } else {
            Err(StoreError::CorruptSnapshot(format!(
                "unsupported version {}",
                self.version
            )))
        }
    }

    pub fn to_canonical_json(&self) -> String {
        // Value's map is ordered, which sorts every object's keys
        let value = serde_json::to_value(self).expect("documents always serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("values always serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> StoreResult<Self> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| StoreError::CorruptSnapshot(e.to_string()))?;
        doc.check_version()?;
        Ok(doc)
    }
}

/// Writes the canonical document for `graph` to `path` via a temp file and rename.
pub fn save_snapshot(graph: &PropertyGraph, path: &Path) -> StoreResult<()> {
    write_atomically(path, graph.export_graph(None).to_canonical_json().as_bytes())
}

pub fn load_snapshot(path: &Path) -> StoreResult<PropertyGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| StoreError::IoFailure(format!("{}: {e}", path.display())))?;
    PropertyGraph::from_document(GraphDocument::from_json(&text)?)
}

pub fn write_atomically(path: &Path, bytes: &[u8]) -> StoreResult<()> {
    let io = |e: std::io::Error| StoreError::IoFailure(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
