//! Labeled property-graph store for knowledge maps.
//!
//! Nodes carry a [`Label`] (`KnowState`, `Learner`, `Lesson`) and a
//! schema-checked attribute map; edges carry an [`EdgeType`]. PRECEDES edges
//! between knowledge states form the prerequisite DAG that
//! [`PropertyGraph::precedence_view`] hands to [`crate::kst`].
//!
//! The store is a plain value. Callers that share it across threads wrap it in
//! a lock, which gives the single-writer / many-reader contract.

mod document;
mod error;
mod graph;
mod schema;

pub use document::{load_snapshot, save_snapshot, write_atomically, GraphDocument, DOCUMENT_VERSION};
pub use error::{StoreError, StoreResult};
pub use graph::{Direction, Edge, Node, PropertyGraph};
pub use schema::{AttrKind, AttrValue, Attrs, EdgeType, Label};
