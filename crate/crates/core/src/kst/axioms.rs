//! Closure and learning-space axioms over a [`KnowledgeStructure`].
//!
//! Union and intersection closure are checked against a generating subset
//! instead of all pairs: every state is a union (resp. intersection) of the
//! states whose inner (resp. outer) fringe has at most one item, so closing
//! each state against those generators is enough. On large families built from
//! prerequisite graphs this keeps the check near-linear.

use super::domain::KnowledgeState;
use super::fringe::{inner_fringe_unchecked, outer_fringe_unchecked};
use super::structure::KnowledgeStructure;

pub fn is_union_closed(family: &KnowledgeStructure) -> bool {
    let generators: Vec<&KnowledgeState> = family
        .states()
        .iter()
        .filter(|s| !s.is_empty() && inner_fringe_unchecked(s, family).len() <= 1)
        .collect();
    family
        .states()
        .iter()
        .all(|k| generators.iter().all(|g| family.contains(&k.union(g))))
}

pub fn is_intersection_closed(family: &KnowledgeStructure) -> bool {
    let generators: Vec<&KnowledgeState> = family
        .states()
        .iter()
        .filter(|s| !s.is_full() && outer_fringe_unchecked(s, family).len() <= 1)
        .collect();
    family
        .states()
        .iter()
        .all(|k| generators.iter().all(|g| family.contains(&k.intersection(g))))
}

/// Every non-empty state can lose some item and remain a state.
pub fn is_accessible(family: &KnowledgeStructure) -> bool {
    family
        .states()
        .iter()
        .filter(|s| !s.is_empty())
        .all(|s| s.iter().any(|q| family.contains(&s.without(q))))
}

/// Any two states are joined by a tight path of one-item steps.
///
/// Equivalent pairwise form: from every state `K` towards every other state
/// `L` there is a single-item move inside `K △ L` that stays in the family.
pub fn is_well_graded(family: &KnowledgeStructure) -> bool {
    let moves: Vec<KnowledgeState> = family
        .states()
        .iter()
        .map(|k| {
            let width = k.width();
            KnowledgeState::from_indices(width, (0..width).filter(|&q| family.contains(&k.toggled(q))))
        })
        .collect();
    let states = family.states();
    states.iter().enumerate().all(|(i, k)| {
        states
            .iter()
            .enumerate()
            .all(|(j, l)| i == j || !moves[i].is_disjoint(&k.symmetric_difference(l)))
    })
}

/// For states `K ⊂ L`, some item of `L ∖ K` can be added to `K` within the family.
pub fn check_learning_smoothness(family: &KnowledgeStructure) -> bool {
    let outer: Vec<KnowledgeState> = family
        .states()
        .iter()
        .map(|k| outer_fringe_unchecked(k, family))
        .collect();
    let states = family.states();
    states.iter().enumerate().all(|(i, k)| {
        states
            .iter()
            .filter(|l| *l != k && k.is_subset(l))
            .all(|l| !outer[i].is_disjoint(&l.difference(k)))
    })
}

/// For states `K ⊆ L`, anything learnable from `K` stays learnable from `L`.
pub fn check_learning_consistency(family: &KnowledgeStructure) -> bool {
    let outer: Vec<KnowledgeState> = family
        .states()
        .iter()
        .map(|k| outer_fringe_unchecked(k, family))
        .collect();
    let states = family.states();
    states.iter().enumerate().all(|(i, k)| {
        states.iter().enumerate().all(|(j, l)| {
            !k.is_subset(l) || outer[i].difference(l).is_subset(&outer[j])
        })
    })
}

/// Contains `∅` and the domain, is union-closed and accessible.
pub fn is_learning_space(family: &KnowledgeStructure) -> bool {
    family.contains_empty()
        && family.contains_full()
        && is_accessible(family)
        && is_union_closed(family)
}
