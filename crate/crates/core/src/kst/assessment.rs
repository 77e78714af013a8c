//! Noiseless adaptive assessment by half-splitting the candidate states.
//!
//! Each answer is taken at face value: a correct answer keeps the candidates
//! holding the item, an incorrect one keeps those lacking it. The next item
//! asked is the one whose membership count is closest to half the candidates.

use std::sync::Arc;

use super::domain::{Item, KnowledgeState};
use super::error::{KstError, KstResult};
use super::structure::KnowledgeStructure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Answer {
    pub item: usize,
    pub correct: bool,
}

#[derive(Debug, Clone)]
pub struct AssessmentSession {
    structure: Arc<KnowledgeStructure>,
    candidates: Vec<usize>,
    history: Vec<Answer>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NextStep {
    Ask(Item),
    Converged(KnowledgeState),
    /// More than one candidate remains but no unasked item separates them.
    Ambiguous(Vec<KnowledgeState>),
}

impl AssessmentSession {
    pub fn structure(&self) -> &Arc<KnowledgeStructure> {
        &self.structure
    }

    pub fn candidates(&self) -> impl Iterator<Item = &KnowledgeState> + '_ {
        self.candidates.iter().map(|&i| &self.structure.states()[i])
    }

    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    pub fn history(&self) -> &[Answer] {
        &self.history
    }

    fn was_asked(&self, item: usize) -> bool {
        self.history.iter().any(|a| a.item == item)
    }

    fn count_holding(&self, item: usize) -> usize {
        self.candidates().filter(|s| s.contains(item)).count()
    }
}

/// Opens a session with every state as a candidate.
///
/// Panics if the family is empty; callers derive families that always hold `∅`.
pub fn assessment_start(family: Arc<KnowledgeStructure>) -> AssessmentSession {
    assert!(!family.is_empty(), "assessment needs at least one state");
    AssessmentSession {
        candidates: (0..family.len()).collect(),
        structure: family,
        history: Vec::new(),
    }
}

pub fn assessment_next_item(session: &AssessmentSession) -> NextStep {
    let total = session.candidate_count();
    if total == 1 {
        return NextStep::Converged(session.candidates().next().expect("one candidate").clone());
    }
    let domain = session.structure.domain();
    // strict `<` keeps the smallest id on ties
    let mut best: Option<(usize, usize)> = None;
    for item in (0..domain.len()).filter(|&q| !session.was_asked(q)) {
        let holding = session.count_holding(item);
        if holding == 0 || holding == total {
            continue;
        }
        let imbalance = (2 * holding).abs_diff(total);
        if best.is_none_or(|(_, b)| imbalance < b) {
            best = Some((item, imbalance));
        }
    }
    match best {
        Some((item, _)) => NextStep::Ask(domain.item(item).clone()),
        None => NextStep::Ambiguous(session.candidates().cloned().collect()),
    }
}

/// Records an answer and filters the candidates.
///
/// Rejects repeated items, and items that do not split the candidates: an
/// answer agreeing with all of them is `UninformativeItem`, one contradicting
/// all of them is `WouldEmptyCandidates`.
pub fn assessment_answer(session: &AssessmentSession, item: &str, correct: bool) -> KstResult<AssessmentSession> {
    let index = session
        .structure
        .domain()
        .index_of(item)
        .ok_or_else(|| KstError::UnknownItem(item.to_string()))?;
    if session.was_asked(index) {
        return Err(KstError::ItemAlreadyAsked(item.to_string()));
    }
    let candidates: Vec<usize> = session
        .candidates
        .iter()
        .copied()
        .filter(|&i| session.structure.states()[i].contains(index) == correct)
        .collect();
    if candidates.is_empty() {
        return Err(KstError::WouldEmptyCandidates(item.to_string()));
    }
    if candidates.len() == session.candidates.len() {
        return Err(KstError::UninformativeItem(item.to_string()));
    }
    let mut history = session.history.clone();
    history.push(Answer { item: index, correct });
    Ok(AssessmentSession {
        structure: Arc::clone(&session.structure),
        candidates,
        history,
    })
}
