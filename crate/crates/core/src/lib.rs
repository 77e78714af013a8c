//! Core of the knowledge space framework.
//!
//! - [`kst`]: knowledge structures, axiom checks, fringes, learning paths,
//!   precedence relations and adaptive assessment.
//! - [`store`]: the labeled property graph that persists knowledge maps, its
//!   snapshot format, and the bridge from stored prerequisites to [`kst`].

pub mod kst;
pub mod store;
