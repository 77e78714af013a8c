//! Knowledge space theory over finite set families.
//!
//! Everything here is a pure function of immutable values.

mod assessment;
mod axioms;
mod domain;
mod error;
mod fringe;
mod paths;
mod precedence;
mod structure;

pub use assessment::{
    assessment_answer, assessment_next_item, assessment_start, Answer, AssessmentSession, NextStep,
};
pub use axioms::{
    check_learning_consistency, check_learning_smoothness, is_accessible, is_intersection_closed,
    is_learning_space, is_union_closed, is_well_graded,
};
pub use domain::{Domain, Item, KnowledgeState};
pub use error::{KstError, KstResult};
pub use fringe::{inner_fringe, outer_fringe};
pub use paths::{learning_paths, LearningPath, LearningPaths};
pub use precedence::{states_from_precedence, surmise_relation, PrecedenceRelation, DEFAULT_STATE_CAP};
pub use structure::{validate_structure, KnowledgeStructure, ValidationReport};
