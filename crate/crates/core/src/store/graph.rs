//! The embedded property graph.
//!
//! Nodes and edges live in id-ordered maps; lookups beyond id access are
//! linear scans. Every mutation validates fully before touching state, so a
//! rejected operation leaves the graph exactly as it was.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::document::GraphDocument;
use super::error::{StoreError, StoreResult};
use super::schema::{check_edge_attrs, check_node_attrs, AttrValue, Attrs, EdgeType, Label};
use crate::kst::{Domain, PrecedenceRelation};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Node {
    pub id: String,
    pub label: Label,
    #[serde(default)]
    pub attrs: Attrs,
}

impl Node {
    pub fn attr(&self, name: &str) -> Option<&AttrValue> {
        self.attrs.get(name)
    }

    fn role(&self) -> Option<&str> {
        match self.attrs.get("role") {
            Some(AttrValue::Text(role)) => Some(role),
            _ => None,
        }
    }
}

/// A typed edge; serializes as a link of the graph document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Edge {
    pub id: String,
    pub source: String,
    pub target: String,
    #[serde(rename = "type")]
    pub edge_type: EdgeType,
    #[serde(default)]
    pub attrs: Attrs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
    Both,
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "out" => Ok(Direction::Out),
            "in" => Ok(Direction::In),
            "both" => Ok(Direction::Both),
            other => Err(format!("direction must be out, in or both, got `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PropertyGraph {
    nodes: BTreeMap<String, Node>,
    edges: BTreeMap<String, Edge>,
    next_node: u64,
    next_edge: u64,
    revision: u64,
}

impl PropertyGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Node> {
        self.nodes.values()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    /// Bumped by every accepted mutation; lets callers cache derived data.
    pub fn revision(&self) -> u64 {
        self.revision
    }

    pub fn create_node(&mut self, label: Label, attrs: Attrs) -> StoreResult<String> {
        check_node_attrs(label, &attrs)?;
        let id = fresh_id('n', &mut self.next_node, &self.nodes);
        self.nodes.insert(id.clone(), Node { id: id.clone(), label, attrs });
        self.revision += 1;
        Ok(id)
    }

    pub fn get_node(&self, id: &str) -> StoreResult<&Node> {
        self.nodes.get(id).ok_or_else(|| StoreError::NotFound(id.to_string()))
    }

    /// Merges `attrs` into the node: given keys overwrite, others are kept.
    pub fn update_node(&mut self, id: &str, attrs: Attrs) -> StoreResult<&Node> {
        let node = self.get_node(id)?;
        check_node_attrs(node.label, &attrs)?;
        let mut merged = node.clone();
        merged.attrs.extend(attrs);
        for edge in self.edges.values().filter(|e| e.source == id) {
            if let Some(role) = edge.edge_type.required_role() {
                if merged.role() != Some(role) {
                    return Err(StoreError::TypeConstraintViolation(format!(
                        "{id} is the source of {} edge {} and must keep role \"{role}\"",
                        edge.edge_type, edge.id
                    )));
                }
            }
        }
        self.nodes.insert(id.to_string(), merged);
        self.revision += 1;
        Ok(&self.nodes[id])
    }

    /// Removes the node and every incident edge; returns how many edges went with it.
    pub fn delete_node(&mut self, id: &str) -> StoreResult<usize> {
        self.get_node(id)?;
        let before = self.edges.len();
        self.edges.retain(|_, e| e.source != id && e.target != id);
        self.nodes.remove(id);
        self.revision += 1;
        Ok(before - self.edges.len())
    }

    pub fn create_edge(
        &mut self,
        edge_type: EdgeType,
        source: &str,
        target: &str,
        attrs: Attrs,
    ) -> StoreResult<String> {
        let edge = Edge {
            id: String::new(),
            source: source.to_string(),
            target: target.to_string(),
            edge_type,
            attrs,
        };
        self.check_edge(&edge)?;
        let id = fresh_id('e', &mut self.next_edge, &self.edges);
        self.edges.insert(id.clone(), Edge { id: id.clone(), ..edge });
        self.revision += 1;
        Ok(id)
    }

    pub fn get_edge(&self, id: &str) -> StoreResult<&Edge> {
        self.edges.get(id).ok_or_else(|| StoreError::NotFound(id.to_string()))
    }

    pub fn delete_edge(&mut self, id: &str) -> StoreResult<Edge> {
        let edge = self
            .edges
            .remove(id)
            .ok_or_else(|| StoreError::NotFound(id.to_string()))?;
        self.revision += 1;
        Ok(edge)
    }

    fn check_edge(&self, edge: &Edge) -> StoreResult<()> {
        let src = self.get_node(&edge.source)?;
        let dst = self.get_node(&edge.target)?;
        let (want_src, want_dst) = edge.edge_type.endpoints();
        if src.label != want_src || dst.label != want_dst {
            return Err(StoreError::TypeConstraintViolation(format!(
                "{} connects {want_src} -> {want_dst}, got {} -> {}",
                edge.edge_type, src.label, dst.label
            )));
        }
        if let Some(role) = edge.edge_type.required_role() {
            if src.role() != Some(role) {
                return Err(StoreError::TypeConstraintViolation(format!(
                    "{} requires a Learner with role \"{role}\" as source",
                    edge.edge_type
                )));
            }
        }
        check_edge_attrs(edge.edge_type, &edge.attrs)?;
        if edge.edge_type == EdgeType::Precedes {
            if edge.source == edge.target {
                return Err(StoreError::TypeConstraintViolation(format!(
                    "PRECEDES cannot loop on {}",
                    edge.source
                )));
            }
            if self.precedes_path(&edge.target, &edge.source) {
                return Err(StoreError::CycleDetected {
                    src: edge.source.clone(),
                    dst: edge.target.clone(),
                });
            }
        }
        Ok(())
    }

    /// Whether a chain of PRECEDES edges leads from `from` to `to`.
    fn precedes_path(&self, from: &str, to: &str) -> bool {
        let mut successors: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in self.edges.values().filter(|e| e.edge_type == EdgeType::Precedes) {
            successors.entry(e.source.as_str()).or_default().push(&e.target);
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![from];
        while let Some(at) = stack.pop() {
            if at == to {
                return true;
            }
            if seen.insert(at) {
                stack.extend(successors.get(at).into_iter().flatten().copied());
            }
        }
        false
    }

    /// Nodes whose `attr` contains `pattern`, ignoring case. List attributes
    /// match when any element does. An empty pattern matches every node that
    /// has the attribute.
    pub fn find_nodes(&self, label: Option<Label>, attr: &str, pattern: &str) -> StoreResult<Vec<&Node>> {
        let labels: Vec<Label> = match label {
            Some(l) => vec![l],
            None => Label::ALL.to_vec(),
        };
        let searchable = labels
            .iter()
            .filter_map(|l| l.attr_kind(attr))
            .any(|k| k.is_searchable());
        if !searchable {
            return Err(StoreError::SchemaViolation {
                attr: attr.to_string(),
                reason: match label {
                    Some(l) => format!("not a searchable attribute of {l}"),
                    None => "not a searchable attribute".to_string(),
                },
            });
        }
        let needle = pattern.to_lowercase();
        let hit = |s: &str| s.to_lowercase().contains(&needle);
        Ok(self
            .nodes
            .values()
            .filter(|n| labels.contains(&n.label))
            .filter(|n| match n.attrs.get(attr) {
                Some(AttrValue::Text(s)) => hit(s),
                Some(AttrValue::List(items)) => items.iter().any(|s| hit(s)),
                _ => false,
            })
            .collect())
    }

    /// Distinct neighbors over matching edges, sorted by id.
    pub fn neighbors(&self, id: &str, direction: Direction, edge_type: Option<EdgeType>) -> StoreResult<Vec<&Node>> {
        self.get_node(id)?;
        let mut found = BTreeSet::new();
        for e in self.edges.values() {
            if edge_type.is_some_and(|t| t != e.edge_type) {
                continue;
            }
            if matches!(direction, Direction::Out | Direction::Both) && e.source == id {
                found.insert(e.target.as_str());
            }
            if matches!(direction, Direction::In | Direction::Both) && e.target == id {
                found.insert(e.source.as_str());
            }
        }
        Ok(found.into_iter().map(|n| &self.nodes[n]).collect())
    }

    /// The canonical document for the nodes carrying one of `labels` (all when
    /// `None`) and the edges whose endpoints both survive.
    pub fn export_graph(&self, labels: Option<&BTreeSet<Label>>) -> GraphDocument {
        let keep = |l: Label| labels.is_none_or(|set| set.contains(&l));
        let nodes: Vec<Node> = self.nodes.values().filter(|n| keep(n.label)).cloned().collect();
        let kept: BTreeSet<&str> = nodes.iter().map(|n| n.id.as_str()).collect();
        let links = self
            .edges
            .values()
            .filter(|e| kept.contains(e.source.as_str()) && kept.contains(e.target.as_str()))
            .cloned()
            .collect();
        GraphDocument::new(nodes, links)
    }

    /// Rebuilds a graph from a document, enforcing every store invariant.
    pub fn from_document(doc: GraphDocument) -> StoreResult<Self> {
        let corrupt = |e: StoreError| StoreError::CorruptSnapshot(e.to_string());
        doc.check_version()?;
        let mut graph = PropertyGraph::new();
        for node in doc.nodes {
            if node.id.is_empty() {
                return Err(StoreError::CorruptSnapshot("node with empty id".into()));
            }
            if graph.nodes.contains_key(&node.id) {
                return Err(StoreError::CorruptSnapshot(format!("duplicate node id {}", node.id)));
            }
            check_node_attrs(node.label, &node.attrs).map_err(|e| corrupt(e).with_context(&node.id))?;
            graph.next_node = graph.next_node.max(id_counter('n', &node.id));
            graph.nodes.insert(node.id.clone(), node);
        }
        let mut links = doc.links;
        links.sort_by(|a, b| a.id.cmp(&b.id));
        for edge in links {
            if edge.id.is_empty() {
                return Err(StoreError::CorruptSnapshot("link with empty id".into()));
            }
            if graph.edges.contains_key(&edge.id) {
                return Err(StoreError::CorruptSnapshot(format!("duplicate link id {}", edge.id)));
            }
            graph.check_edge(&edge).map_err(|e| corrupt(e).with_context(&edge.id))?;
            graph.next_edge = graph.next_edge.max(id_counter('e', &edge.id));
            graph.edges.insert(edge.id.clone(), edge);
        }
        Ok(graph)
    }

    /// The prerequisite relation over all KnowState nodes, or `None` when there are none.
    pub fn precedence_view(&self) -> Option<PrecedenceRelation> {
        let ids = self
            .nodes
            .values()
            .filter(|n| n.label == Label::KnowState)
            .map(|n| n.id.clone());
        let domain = Domain::new(ids).ok()?;
        let pairs = self
            .edges
            .values()
            .filter(|e| e.edge_type == EdgeType::Precedes)
            .map(|e| (e.source.as_str(), e.target.as_str()));
        let relation = PrecedenceRelation::new(domain, pairs)
            .expect("PRECEDES edges join KnowState nodes and stay acyclic");
        Some(relation)
    }
}

impl StoreError {
    fn with_context(self, id: &str) -> StoreError {
        match self {
            StoreError::CorruptSnapshot(reason) => StoreError::CorruptSnapshot(format!("{id}: {reason}")),
            other => other,
        }
    }
}

fn fresh_id<V>(prefix: char, counter: &mut u64, taken: &BTreeMap<String, V>) -> String {
    loop {
        *counter += 1;
        let id = format!("{prefix}{counter}");
        if !taken.contains_key(&id) {
            return id;
        }
    }
}

/// Numeric suffix of ids shaped like `n12`; other ids do not move the counter.
fn id_counter(prefix: char, id: &str) -> u64 {
    id.strip_prefix(prefix)
        .filter(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|digits| digits.parse().ok())
        .unwrap_or(0)
}
