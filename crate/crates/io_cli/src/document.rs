//! The JSON presentation format:
//!
//! ```json
//! {"field": {"char": 0},
//!  "vertices": ["1", "2"],
//!  "arrows": [{"id": "a", "source": "1", "target": "2", "degree": 0}],
//!  "relations": [["b", "a"]],
//!  "special": ["eps"]}
//! ```
//!
//! A relation `["b", "a"]` is the length-2 path "first `a`, then `b`"
//! (right-to-left composition).  Unknown keys are rejected; semantic
//! validation is left to [`validate_triple`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use skewgentle_core::{validate_triple, RawArrow, RawPresentation, SkewGentleTriple, ValidationErrors};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDocument {
    /// `0` for ℚ, otherwise a prime `p` for 𝔽ₚ.
    #[serde(rename = "char")]
    pub characteristic: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDocument {
    pub id: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
}

/// A presentation as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    pub field: FieldDocument,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDocument>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default)]
    pub special: Vec<String>,
}

/// A malformed presentation file.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema error{}: {message}", location.map(|(l, c)| format!(" at line {l}, column {c}")).unwrap_or_default())]
    Schema {
        location: Option<(usize, usize)>,
        message: String,
    },
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },
}

/// Either a malformed file or a presentation that is not a skew-gentle
/// triple.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid presentation:\n{0}")]
    Invalid(#[from] ValidationErrors),
}

fn schema(message: impl Into<String>) -> ParseError {
    ParseError::Schema {
        location: None,
        message: message.into(),
    }
}

fn no_duplicates<'a>(kind: &'static str, ids: impl Iterator<Item = &'a String>) -> Result<(), ParseError> {
    let mut seen = BTreeSet::new();
    for id in ids {
        if !seen.insert(id) {
            return Err(ParseError::DuplicateId { kind, id: id.clone() });
        }
    }
    Ok(())
}

/// Parses a presentation document, checking the shape of the data (not
/// the skew-gentle conditions).
pub fn parse_presentation(text: &str) -> Result<PresentationDocument, ParseError> {
    let doc: PresentationDocument = serde_json::from_str(text).map_err(|e| {
        let (line, column, message) = (e.line(), e.column(), e.to_string());
        match e.classify() {
            serde_json::error::Category::Data => ParseError::Schema {
                location: Some((line, column)),
                message,
            },
            _ => ParseError::Syntax { line, column, message },
        }
    })?;
    if doc.vertices.is_empty() {
        return Err(schema("the vertex list is empty"));
    }
    for r in &doc.relations {
        if r.len() != 2 {
            return Err(schema(format!(
                "relation [{}] has length {}; relations are paths of length 2",
                r.join(", "),
                r.len()
            )));
        }
    }
    no_duplicates("vertex", doc.vertices.iter())?;
    no_duplicates("arrow", doc.arrows.iter().map(|a| &a.id))?;
    no_duplicates("special", doc.special.iter())?;
    Ok(doc)
}

impl PresentationDocument {
    pub fn to_raw(&self) -> RawPresentation {
        RawPresentation {
            characteristic: self.field.characteristic,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    id: a.id.clone(),
                    source: a.source.clone(),
                    target: a.target.clone(),
                    degree: a.degree,
                })
                .collect(),
            relations: self.relations.clone(),
            special: self.special.clone(),
        }
    }

    /// The document of a validated triple (relations and special loops in
    /// the triple's order).
    pub fn from_triple(t: &SkewGentleTriple) -> Self {
        let q = t.quiver();
        let id = |a: usize| q.arrow(a).id.clone();
        PresentationDocument {
            field: FieldDocument {
                characteristic: t.field().characteristic(),
            },
            vertices: (0..q.vertex_count()).map(|v| q.vertex_name(v).to_string()).collect(),
            arrows: (0..q.arrow_count())
                .map(|a| ArrowDocument {
                    id: id(a),
                    source: q.vertex_name(q.source(a)).to_string(),
                    target: q.vertex_name(q.target(a)).to_string(),
                    degree: q.degree(a),
                })
                .collect(),
            relations: t.relations().iter().map(|&(first, second)| vec![id(second), id(first)]).collect(),
            special: t.special_loops().into_iter().map(id).collect(),
        }
    }

    pub fn validate(&self) -> Result<SkewGentleTriple, ValidationErrors> {
        validate_triple(&self.to_raw())
    }

    /// Pretty JSON in the input format.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// Parses and validates.
pub fn load_presentation(text: &str) -> Result<SkewGentleTriple, InputError> {
    Ok(parse_presentation(text)?.validate()?)
}
