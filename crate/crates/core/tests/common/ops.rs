//! Random store mutations and an independent full-scan invariant check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ksf_core::store::{AttrValue, Attrs, EdgeType, Label, PropertyGraph, StoreResult};
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone)]
pub enum Op {
    CreateNode(Label, Attrs),
    UpdateNode(String, Attrs),
    DeleteNode(String),
    CreateEdge(EdgeType, String, String, Attrs),
    DeleteEdge(String),
}

const TOPICS: [&str; 6] = ["Algebra I", "Linear Algebra", "Geometry", "Fractions", "Calculus", "algebraic topology"];
const NAMES: [&str; 5] = ["Ada", "Adam", "Bo", "Cy", "Dee"];

fn pick_id(rng: &mut impl Rng, ids: &[String], prefix: char) -> String {
    if ids.is_empty() || rng.gen_bool(0.05) {
        format!("{prefix}{}", rng.gen_range(0..500))
    } else {
        ids.choose(rng).unwrap().clone()
    }
}

fn random_attrs(rng: &mut impl Rng, label: Label) -> Attrs {
    let mut attrs = Attrs::new();
    match label {
        Label::KnowState => {
            if rng.gen_bool(0.8) {
                attrs.insert("topic".into(), TOPICS.choose(rng).unwrap().to_string().as_str().into());
            }
            if rng.gen_bool(0.5) {
                attrs.insert("title".into(), format!("State {}", rng.gen::<u16>()).as_str().into());
            }
            if rng.gen_bool(0.3) {
                attrs.insert("released".into(), rng.gen_bool(0.5).into());
            }
            if rng.gen_bool(0.3) {
                attrs.insert("tags".into(), vec!["core", "extra"][..rng.gen_range(0..=2)].to_vec().into());
            }
        }
        Label::Learner => {
            attrs.insert("name".into(), (*NAMES.choose(rng).unwrap()).into());
            if rng.gen_bool(0.9) {
                let role = if rng.gen_bool(0.6) { "student" } else { "instructor" };
                attrs.insert("role".into(), role.into());
            }
            if rng.gen_bool(0.3) {
                attrs.insert("reviewed_on".into(), "2016-04-30".into());
            }
        }
        Label::Lesson => {
            attrs.insert("title".into(), "Intro".into());
        }
    }
    // occasionally poison the map to exercise rejection
    if rng.gen_bool(0.05) {
        attrs.insert("color".into(), "red".into());
    }
    attrs
}

pub fn random_op(rng: &mut impl Rng, graph: &PropertyGraph) -> Op {
    let node_ids: Vec<String> = graph.nodes().map(|n| n.id.clone()).collect();
    let edge_ids: Vec<String> = graph.edges().map(|e| e.id.clone()).collect();
    let labels = [Label::KnowState, Label::KnowState, Label::Learner, Label::Lesson];
    match rng.gen_range(0..100) {
        0..=29 => {
            let label = *labels.choose(rng).unwrap();
            Op::CreateNode(label, random_attrs(rng, label))
        }
        30..=39 => {
            let id = pick_id(rng, &node_ids, 'n');
            let label = graph.get_node(&id).map(|n| n.label).unwrap_or(Label::KnowState);
            let mut attrs = random_attrs(rng, label);
            attrs.retain(|_, _| rng.gen_bool(0.5));
            Op::UpdateNode(id, attrs)
        }
        40..=47 => Op::DeleteNode(pick_id(rng, &node_ids, 'n')),
        48..=89 => {
            let edge_type = *[EdgeType::Precedes, EdgeType::Precedes, EdgeType::Precedes, EdgeType::Reviewed, EdgeType::Developed, EdgeType::Covers]
                .choose(rng)
                .unwrap();
            let mut attrs = Attrs::new();
            match edge_type {
                EdgeType::Precedes if rng.gen_bool(0.5) => {
                    attrs.insert("weight".into(), AttrValue::Number(rng.gen_range(-0.2..1.2)));
                }
                EdgeType::Reviewed if rng.gen_bool(0.5) => {
                    attrs.insert("lessons".into(), vec!["intro"].into());
                }
                _ => {}
            }
            let src = pick_id(rng, &node_ids, 'n');
            let dst = pick_id(rng, &node_ids, 'n');
            Op::CreateEdge(edge_type, src, dst, attrs)
        }
        _ => Op::DeleteEdge(pick_id(rng, &edge_ids, 'e')),
    }
}

pub fn apply(graph: &mut PropertyGraph, op: &Op) -> StoreResult<()> {
    match op.clone() {
        Op::CreateNode(label, attrs) => graph.create_node(label, attrs).map(drop),
        Op::UpdateNode(id, attrs) => graph.update_node(&id, attrs).map(drop),
        Op::DeleteNode(id) => graph.delete_node(&id).map(drop),
        Op::CreateEdge(t, s, d, attrs) => graph.create_edge(t, &s, &d, attrs).map(drop),
        Op::DeleteEdge(id) => graph.delete_edge(&id).map(drop),
    }
}

/// Scans the whole graph: no dangling edges, endpoint labels and roles match
/// the edge type, and PRECEDES edges are acyclic (Kahn's algorithm).
pub fn check_invariants(graph: &PropertyGraph) -> Result<(), String> {
    let labels: BTreeMap<&str, Label> = graph.nodes().map(|n| (n.id.as_str(), n.label)).collect();
    let roles: BTreeMap<&str, Option<&AttrValue>> = graph.nodes().map(|n| (n.id.as_str(), n.attrs.get("role"))).collect();
    for e in graph.edges() {
        let (Some(&src), Some(&dst)) = (labels.get(e.source.as_str()), labels.get(e.target.as_str())) else {
            return Err(format!("edge {} dangles", e.id));
        };
        let ok = match e.edge_type {
            EdgeType::Precedes => src == Label::KnowState && dst == Label::KnowState && e.source != e.target,
            EdgeType::Reviewed => {
                src == Label::Learner && dst == Label::Lesson && roles[e.source.as_str()] == Some(&"student".into())
            }
            EdgeType::Developed => {
                src == Label::Learner && dst == Label::Lesson && roles[e.source.as_str()] == Some(&"instructor".into())
            }
            EdgeType::Covers => src == Label::Lesson && dst == Label::KnowState,
        };
        if !ok {
            return Err(format!("edge {} violates its type constraint", e.id));
        }
    }
    let precedes: Vec<(&str, &str)> = graph
        .edges()
        .filter(|e| e.edge_type == EdgeType::Precedes)
        .map(|e| (e.source.as_str(), e.target.as_str()))
        .collect();
    let mut indegree: BTreeMap<&str, usize> = labels.keys().map(|&k| (k, 0)).collect();
    for &(_, d) in &precedes {
        *indegree.get_mut(d).unwrap() += 1;
    }
    let mut ready: Vec<&str> = indegree.iter().filter(|(_, &d)| d == 0).map(|(&k, _)| k).collect();
    let mut placed = BTreeSet::new();
    while let Some(n) = ready.pop() {
        placed.insert(n);
        for &(s, d) in &precedes {
            if s == n {
                let entry = indegree.get_mut(d).unwrap();
                *entry -= 1;
                if *entry == 0 {
                    ready.push(d);
                }
            }
        }
    }
    if placed.len() != labels.len() {
        return Err("PRECEDES edges contain a cycle".into());
    }
    Ok(())
}

/// A random valid store built from `steps` random operations.
pub fn random_store(rng: &mut impl Rng, steps: usize) -> PropertyGraph {
    let mut graph = PropertyGraph::new();
    for _ in 0..steps {
        let op = random_op(rng, &graph);
        let _ = apply(&mut graph, &op);
    }
    graph
}
