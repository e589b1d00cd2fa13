//! Graded quivers with lexicographically indexed vertices and arrows.

use std::collections::HashMap;

/// Index of a vertex (position in the lexicographically sorted vertex list).
pub type VertexId = usize;
/// Index of an arrow (position in the lexicographically sorted arrow list).
pub type ArrowId = usize;

/// A graded arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: VertexId,
    pub target: VertexId,
    pub degree: i64,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite graded quiver.  Vertices and arrows are stored sorted by their
/// identifiers, so every index-based ordering is the lexicographic order on
/// identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    outgoing: Vec<Vec<ArrowId>>,
    incoming: Vec<Vec<ArrowId>>,
    vertex_lookup: HashMap<String, VertexId>,
    arrow_lookup: HashMap<String, ArrowId>,
    single_char_ids: bool,
}

impl Quiver {
    /// Builds a quiver from sorted, duplicate-free vertex names and arrows
    /// whose endpoints index into `vertices`.  Arrows are sorted by id here.
    pub(crate) fn from_parts(vertices: Vec<String>, mut arrows: Vec<Arrow>) -> Self {
        arrows.sort_by(|a, b| a.id.cmp(&b.id));
        let mut outgoing = vec![Vec::new(); vertices.len()];
        let mut incoming = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source].push(i);
            incoming[a.target].push(i);
        }
        let vertex_lookup = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let arrow_lookup = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.clone(), i))
            .collect();
        let single_char_ids = arrows.iter().all(|a| a.id.chars().count() == 1);
        Quiver {
            vertices,
            arrows,
            outgoing,
            incoming,
            vertex_lookup,
            arrow_lookup,
            single_char_ids,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, name: &str) -> Option<VertexId> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn arrow_index(&self, id: &str) -> Option<ArrowId> {
        self.arrow_lookup.get(id).copied()
    }

    /// Arrows starting at `v`, in id order.
    pub fn outgoing(&self, v: VertexId) -> &[ArrowId] {
        &self.outgoing[v]
    }

    /// Arrows ending at `v`, in id order.
    pub fn incoming(&self, v: VertexId) -> &[ArrowId] {
        &self.incoming[v]
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a].target
    }

    pub fn degree(&self, a: ArrowId) -> i64 {
        self.arrows[a].degree
    }

    /// Separator used when rendering paths: empty when every arrow id is a
    /// single character (so `cba` reads as in the usual notation), a dot
    /// otherwise.
    pub fn path_separator(&self) -> &'static str {
        if self.single_char_ids {
            ""
        } else {
            "."
        }
    }
}
