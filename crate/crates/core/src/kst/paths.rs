use serde::Serialize;

use super::domain::KnowledgeState;
use super::error::{KstError, KstResult};
use super::fringe::outer_fringe_unchecked;
use super::structure::KnowledgeStructure;

/// A gradation: states from `∅` to the full domain, one item per step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LearningPath {
    pub steps: Vec<KnowledgeState>,
}

impl LearningPath {
    /// Item indices in the order they are learned.
    pub fn item_order(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .map(|w| w[1].difference(&w[0]).first().expect("each step adds one item"))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LearningPaths {
    #[serde(skip)]
    pub paths: Vec<LearningPath>,
    pub truncated: bool,
}

/// Enumerates gradations depth-first, extending by the smallest item first.
/// Stops after `limit` paths; `truncated` reports whether more exist.
pub fn learning_paths(family: &KnowledgeStructure, limit: usize) -> KstResult<LearningPaths> {
    if limit == 0 {
        return Err(KstError::InvalidLimit);
    }
    if !family.contains_empty() || !family.contains_full() {
        return Err(KstError::MissingEndpoints);
    }

    // Which states can still reach the full domain; lets the walk skip dead ends.
    let states = family.states();
    let mut reaches = vec![false; states.len()];
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); states.len()];
    for (i, state) in states.iter().enumerate().rev() {
        if state.is_full() {
            reaches[i] = true;
            continue;
        }
        let next: Vec<usize> = outer_fringe_unchecked(state, family)
            .iter()
            .filter_map(|q| family.position(&state.with(q)))
            .filter(|&j| reaches[j])
            .collect();
        reaches[i] = !next.is_empty();
        successors[i] = next;
    }
    let start = family.position(&family.domain().empty_state()).expect("checked above");
    if !reaches[start] {
        return Err(KstError::NoPath);
    }

    let mut walk = Walk {
        states,
        successors: &successors,
        limit,
        found: Vec::new(),
        truncated: false,
    };
    let mut trail = vec![start];
    walk.visit(&mut trail);
    Ok(LearningPaths {
        paths: walk.found,
        truncated: walk.truncated,
    })
}

struct Walk<'a> {
    states: &'a [KnowledgeState],
    successors: &'a [Vec<usize>],
    limit: usize,
    found: Vec<LearningPath>,
    truncated: bool,
}

impl Walk<'_> {
    // Returns false once the search should stop.
    fn visit(&mut self, trail: &mut Vec<usize>) -> bool {
        let here = *trail.last().expect("trail starts at the empty state");
        if self.states[here].is_full() {
            if self.found.len() == self.limit {
                self.truncated = true;
                return false;
            }
            self.found.push(LearningPath {
                steps: trail.iter().map(|&i| self.states[i].clone()).collect(),
            });
            return true;
        }
        // successor positions were collected in ascending item order
        for &next in &self.successors[here] {
            trail.push(next);
            let go_on = self.visit(trail);
            trail.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}
