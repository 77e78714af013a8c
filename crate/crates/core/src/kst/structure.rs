use std::collections::HashMap;

use serde::Serialize;

use super::axioms;
use super::domain::{Domain, KnowledgeState};
use super::error::{KstError, KstResult};

/// A deduplicated family of states over a domain, kept in canonical order.
#[derive(Debug, Clone)]
pub struct KnowledgeStructure {
    domain: Domain,
    states: Vec<KnowledgeState>,
    index: HashMap<KnowledgeState, usize>,
    duplicates_removed: usize,
    foreign_sets_dropped: usize,
}

impl PartialEq for KnowledgeStructure {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain && self.states == other.states
    }
}

impl Eq for KnowledgeStructure {}

impl KnowledgeStructure {
    /// Builds a structure from states that already live on `domain`.
    pub fn new(domain: Domain, states: impl IntoIterator<Item = KnowledgeState>) -> KstResult<Self> {
        let states: Vec<_> = states.into_iter().collect();
        if let Some(bad) = states.iter().find(|s| s.width() != domain.len()) {
            return Err(KstError::WidthMismatch {
                expected: domain.len(),
                found: bad.width(),
            });
        }
        Ok(Self::assemble(domain, states, 0))
    }

    /// Builds a structure from lists of item ids.
    ///
    /// Never fails: a set naming an id outside the domain is dropped and
    /// reported through [`ValidationReport::all_within_domain`].
    pub fn from_item_sets<I, S, T>(domain: Domain, sets: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let mut dropped = 0;
        let states: Vec<_> = sets
            .into_iter()
            .filter_map(|set| match domain.state(set) {
                Ok(state) => Some(state),
                Err(_) => {
                    dropped += 1;
                    None
                }
            })
            .collect();
        Self::assemble(domain, states, dropped)
    }

    fn assemble(domain: Domain, mut states: Vec<KnowledgeState>, foreign_sets_dropped: usize) -> Self {
        let before = states.len();
        states.sort();
        states.dedup();
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        KnowledgeStructure {
            domain,
            duplicates_removed: before - states.len(),
            states,
            index,
            foreign_sets_dropped,
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// States in canonical order.
    pub fn states(&self) -> &[KnowledgeState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, state: &KnowledgeState) -> bool {
        self.index.contains_key(state)
    }

    /// Position of `state` in canonical order.
    pub fn position(&self, state: &KnowledgeState) -> Option<usize> {
        self.index.get(state).copied()
    }

    pub fn contains_empty(&self) -> bool {
        self.contains(&self.domain.empty_state())
    }

    pub fn contains_full(&self) -> bool {
        self.contains(&self.domain.full_state())
    }

    pub fn duplicates_removed(&self) -> usize {
        self.duplicates_removed
    }
}

/// Summary of which knowledge-space conditions a family meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub contains_empty: bool,
    pub contains_full: bool,
    pub all_within_domain: bool,
    pub duplicates_removed: usize,
    pub is_space: bool,
    pub is_learning_space: bool,
}

pub fn validate_structure(family: &KnowledgeStructure) -> ValidationReport {
    let contains_empty = family.contains_empty();
    let contains_full = family.contains_full();
    let union_closed = axioms::is_union_closed(family);
    let is_space = contains_empty && contains_full && union_closed;
    ValidationReport {
        contains_empty,
        contains_full,
        all_within_domain: family.foreign_sets_dropped == 0,
        duplicates_removed: family.duplicates_removed,
        is_space,
        is_learning_space: is_space && axioms::is_accessible(family),
    }
}
