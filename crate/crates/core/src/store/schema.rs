//! Node labels, edge types and the attribute schema attached to each.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::error::StoreError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    KnowState,
    Learner,
    Lesson,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::KnowState, Label::Learner, Label::Lesson];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::KnowState => "KnowState",
            Label::Learner => "Learner",
            Label::Lesson => "Lesson",
        }
    }

    pub fn attr_kind(self, name: &str) -> Option<AttrKind> {
        use AttrKind::*;
        let kind = match (self, name) {
            (Label::KnowState, "title" | "topic") => Text,
            (Label::KnowState, "released") => Flag,
            (Label::KnowState, "tags") => TextList,
            (Label::Learner, "name") => Text,
            (Label::Learner, "reviewed_on") => Date,
            (Label::Learner, "role") => Role,
            (Label::Lesson, "title") => Text,
            _ => return None,
        };
        Some(kind)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = StoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Label::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| StoreError::InvalidLabel(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum EdgeType {
    Precedes,
    Reviewed,
    Developed,
    Covers,
}

impl EdgeType {
    pub const ALL: [EdgeType; 4] = [
        EdgeType::Precedes,
        EdgeType::Reviewed,
        EdgeType::Developed,
        EdgeType::Covers,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeType::Precedes => "PRECEDES",
            EdgeType::Reviewed => "REVIEWED",
            EdgeType::Developed => "DEVELOPED",
            EdgeType::Covers => "COVERS",
        }
    }

    pub fn attr_kind(self, name: &str) -> Option<AttrKind> {
        match (self, name) {
            (EdgeType::Precedes, "weight") => Some(AttrKind::Probability),
            (EdgeType::Reviewed, "lessons") => Some(AttrKind::TextList),
            _ => None,
        }
    }

    /// Endpoint labels this edge type connects.
    pub fn endpoints(self) -> (Label, Label) {
        match self {
            EdgeType::Precedes => (Label::KnowState, Label::KnowState),
            EdgeType::Reviewed | EdgeType::Developed => (Label::Learner, Label::Lesson),
            EdgeType::Covers => (Label::Lesson, Label::KnowState),
        }
    }

    /// Learner role the source must carry, if any.
    pub fn required_role(self) -> Option<&'static str> {
        match self {
            EdgeType::Reviewed => Some("student"),
            EdgeType::Developed => Some("instructor"),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EdgeType {
    type Err = StoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EdgeType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| StoreError::InvalidEdgeType(s.to_string()))
    }
}

/// An attribute value as it appears on the wire.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AttrValue {
    Bool(bool),
    Number(f64),
    Text(String),
    List(Vec<String>),
}

impl AttrValue {
    fn type_name(&self) -> &'static str {
        match self {
            AttrValue::Bool(_) => "boolean",
            AttrValue::Number(_) => "number",
            AttrValue::Text(_) => "string",
            AttrValue::List(_) => "list of strings",
        }
    }
}

impl From<&str> for AttrValue {
    fn from(s: &str) -> Self {
        AttrValue::Text(s.to_string())
    }
}

impl From<bool> for AttrValue {
    fn from(b: bool) -> Self {
        AttrValue::Bool(b)
    }
}

impl From<f64> for AttrValue {
    fn from(x: f64) -> Self {
        AttrValue::Number(x)
    }
}

impl From<Vec<&str>> for AttrValue {
    fn from(v: Vec<&str>) -> Self {
        AttrValue::List(v.into_iter().map(str::to_string).collect())
    }
}

pub type Attrs = BTreeMap<String, AttrValue>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttrKind {
    Text,
    Flag,
    TextList,
    /// ISO-8601 calendar date, optionally with a time.
    Date,
    /// "student" or "instructor".
    Role,
    /// Number in `[0, 1]`.
    Probability,
}

impl AttrKind {
    /// Whether substring search applies to values of this kind.
    pub fn is_searchable(self) -> bool {
        matches!(self, AttrKind::Text | AttrKind::TextList | AttrKind::Date | AttrKind::Role)
    }

    pub fn check(self, name: &str, value: &AttrValue) -> Result<(), StoreError> {
        let violation = |reason: String| {
            Err(StoreError::SchemaViolation {
                attr: name.to_string(),
                reason,
            })
        };
        match (self, value) {
            (AttrKind::Text, AttrValue::Text(_))
            | (AttrKind::Flag, AttrValue::Bool(_))
            | (AttrKind::TextList, AttrValue::List(_)) => Ok(()),
            (AttrKind::Date, AttrValue::Text(s)) => {
                let is_date = chrono::NaiveDate::parse_from_str(s, "%Y-%m-%d").is_ok()
                    || chrono::DateTime::parse_from_rfc3339(s).is_ok();
                if is_date {
                    Ok(())
                } else {
                    violation(format!("`{s}` is not an ISO-8601 date"))
                }
            }
            (AttrKind::Role, AttrValue::Text(s)) => match s.as_str() {
                "student" | "instructor" => Ok(()),
                _ => violation(format!("role must be \"student\" or \"instructor\", got `{s}`")),
            },
            (AttrKind::Probability, AttrValue::Number(x)) => {
                if (0.0..=1.0).contains(x) {
                    Ok(())
                } else {
                    violation(format!("weight {x} is outside [0, 1]"))
                }
            }
            (kind, other) => violation(format!("expected {kind:?}, got {}", other.type_name())),
        }
    }
}

pub(crate) fn check_node_attrs(label: Label, attrs: &Attrs) -> Result<(), StoreError> {
    for (name, value) in attrs {
        let kind = label.attr_kind(name).ok_or_else(|| StoreError::SchemaViolation {
            attr: name.clone(),
            reason: format!("not an attribute of {label}"),
        })?;
        kind.check(name, value)?;
    }
    Ok(())
}

pub(crate) fn check_edge_attrs(edge_type: EdgeType, attrs: &Attrs) -> Result<(), StoreError> {
    for (name, value) in attrs {
        let kind = edge_type.attr_kind(name).ok_or_else(|| StoreError::SchemaViolation {
            attr: name.clone(),
            reason: format!("not an attribute of {edge_type}"),
        })?;
        kind.check(name, value)?;
    }
    Ok(())
}
