use std::io::Write;
use std::path::Path;

use ksf_core::kst::{states_from_precedence, validate_structure};
use ksf_core::store::{load_snapshot, write_atomically, Label};

use crate::Failure;

pub fn validate(data: &Path, cap: usize) -> Result<u8, Failure> {
    let graph = load_snapshot(data)?;
    let relation = graph
        .precedence_view()
        .ok_or_else(|| Failure::new(1, "the store holds no KnowState nodes"))?;
    let structure = states_from_precedence(&relation, cap)?;
    let report = validate_structure(&structure);
    let lines = [
        format!("contains empty: {}", report.contains_empty),
        format!("contains full: {}", report.contains_full),
        format!("all within domain: {}", report.all_within_domain),
        format!("duplicates removed: {}", report.duplicates_removed),
        format!("knowledge space: {}", report.is_space),
        format!("learning space: {}", report.is_learning_space),
        format!("state count: {}", structure.len()),
    ];
    emit(&lines)?;
    Ok(if report.is_learning_space { 0 } else { 1 })
}

/// Loads `from` with full validation and writes its canonical form to `to`.
pub fn copy(from: &Path, to: &Path) -> Result<u8, Failure> {
    let graph = load_snapshot(from)?;
    let text = graph.export_graph(None).to_canonical_json();
    write_atomically(to, text.as_bytes())?;
    Ok(0)
}

pub fn query(data: &Path, target: &str, pattern: &str) -> Result<u8, Failure> {
    let graph = load_snapshot(data)?;
    let (label, attr) = match target {
        "knowstates" => (Label::KnowState, "topic"),
        _ => (Label::Learner, "name"),
    };
    let lines = graph
        .find_nodes(Some(label), attr, pattern)?
        .into_iter()
        .map(|n| serde_json::to_string(n).expect("nodes serialize"))
        .collect::<Vec<_>>();
    emit(&lines)?;
    Ok(0)
}

fn emit(lines: &[String]) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    for line in lines {
        writeln!(out, "{line}").map_err(|e| Failure::new(3, e.to_string()))?;
    }
    Ok(())
}
