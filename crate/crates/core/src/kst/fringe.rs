use super::domain::KnowledgeState;
use super::error::{KstError, KstResult};
use super::structure::KnowledgeStructure;

/// Items whose removal from `state` stays inside the family.
pub fn inner_fringe(state: &KnowledgeState, family: &KnowledgeStructure) -> KstResult<KnowledgeState> {
    ensure_member(state, family)?;
    Ok(inner_fringe_unchecked(state, family))
}

/// Items not in `state` whose addition stays inside the family.
pub fn outer_fringe(state: &KnowledgeState, family: &KnowledgeStructure) -> KstResult<KnowledgeState> {
    ensure_member(state, family)?;
    Ok(outer_fringe_unchecked(state, family))
}

fn ensure_member(state: &KnowledgeState, family: &KnowledgeStructure) -> KstResult<()> {
    if family.contains(state) {
        Ok(())
    } else {
        Err(KstError::StateNotInStructure)
    }
}

pub(crate) fn inner_fringe_unchecked(state: &KnowledgeState, family: &KnowledgeStructure) -> KnowledgeState {
    KnowledgeState::from_indices(
        state.width(),
        state.iter().filter(|&q| family.contains(&state.without(q))),
    )
}

pub(crate) fn outer_fringe_unchecked(state: &KnowledgeState, family: &KnowledgeStructure) -> KnowledgeState {
    let width = state.width();
    KnowledgeState::from_indices(
        width,
        (0..width).filter(|&q| !state.contains(q) && family.contains(&state.with(q))),
    )
}
