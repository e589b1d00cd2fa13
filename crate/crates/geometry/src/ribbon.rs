//! The graded marked ribbon graph `G` of a skew-gentle triple.
//!
//! Vertices of `G` are the maximal paths of the gentle companion (where
//! `ε² = 0`) with the special loops deleted, the relation-free cycles
//! (likewise with special loops deleted), the trivial paths at vertices of
//! `Q` lying on only one such path, and one vertex per special loop.  Edges
//! are the vertices of `Q`; a vertex of `G` carries one half-edge per visit
//! of its path to a vertex of `Q`, in visiting order.

use std::fmt::Write;

use skewgentle_core::{ArrowId, Path, SkewGentleTriple, VertexId};
use skewgentle_enumerate::{canonical_rotation, companion_maximal_paths, primitive_cocomplete};

use crate::error::GeometryError;

/// What a vertex of `G` stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexKind {
    /// A finite maximal path of the gentle companion, special loops
    /// included (walked order).
    Finite { path: Path },
    /// A primitive relation-free cycle, special loops included.
    Infinite { cycle: Path },
    /// A trivial path `e_i`.
    Trivial { vertex: VertexId },
    /// A special loop; drawn as an orbifold point.
    Special { arrow: ArrowId },
}

/// The angle from a half-edge to its cyclic successor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Angle {
    Marked,
    /// An unmarked angle, graded by the degree of its arrow.
    Arrow(ArrowId),
    /// The unique angle at a special vertex, graded zero.
    Special(ArrowId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVertex {
    pub kind: VertexKind,
    /// `q` with special loops deleted, e.g. `c.b.a`, `e_1` or `eps2`.
    pub label: String,
    /// Half-edges in cyclic order.
    pub half_edges: Vec<usize>,
}

impl GraphVertex {
    pub fn is_special(&self) -> bool {
        matches!(self.kind, VertexKind::Special { .. })
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.kind, VertexKind::Infinite { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub vertex: usize,
    /// The edge, i.e. a vertex of `Q`.
    pub edge: VertexId,
    /// The angle from this half-edge to `σ` of it.
    pub angle: Angle,
}

/// The marked ribbon graph with its half-edge structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    pub vertices: Vec<GraphVertex>,
    pub half_edges: Vec<HalfEdge>,
    /// `ι`: the other half-edge of the same edge.
    pub partner: Vec<usize>,
    pub edge_count: usize,
}

fn deleted(t: &SkewGentleTriple, arrows: &[ArrowId]) -> Vec<ArrowId> {
    arrows.iter().copied().filter(|&a| !t.is_special(a)).collect()
}

fn label(t: &SkewGentleTriple, source: VertexId, arrows: Vec<ArrowId>) -> String {
    t.show(&Path::from_raw(source, arrows))
}

/// The trivial-path rule: `i` meets exactly one arrow, or is the source of
/// exactly one arrow `α` and the target of exactly one arrow `β` with `αβ`
/// not a relation of the gentle companion.
fn trivial_vertex(t: &SkewGentleTriple, v: VertexId) -> bool {
    let q = t.quiver();
    let (out, inc) = (q.outgoing(v), q.incoming(v));
    match (out.len(), inc.len()) {
        (1, 0) | (0, 1) => true,
        (1, 1) => !t.in_s(inc[0], out[0]),
        _ => false,
    }
}

struct Builder {
    vertices: Vec<GraphVertex>,
    half_edges: Vec<HalfEdge>,
}

impl Builder {
    fn add(&mut self, kind: VertexKind, label: String, visits: &[(VertexId, Angle)]) {
        let vertex = self.vertices.len();
        let start = self.half_edges.len();
        for &(edge, angle) in visits {
            self.half_edges.push(HalfEdge { vertex, edge, angle });
        }
        self.vertices.push(GraphVertex {
            kind,
            label,
            half_edges: (start..self.half_edges.len()).collect(),
        });
    }
}

impl RibbonGraph {
    /// Builds `G`.
    pub fn build(t: &SkewGentleTriple) -> Result<Self, GeometryError> {
        let q = t.quiver();
        let mut b = Builder {
            vertices: Vec::new(),
            half_edges: Vec::new(),
        };
        for path in companion_maximal_paths(t) {
            let arrows = deleted(t, path.arrows());
            let mut visits = vec![(path.source(), Angle::Marked)];
            for &a in &arrows {
                visits.last_mut().expect("visit").1 = Angle::Arrow(a);
                visits.push((q.target(a), Angle::Marked));
            }
            let name = label(t, path.source(), arrows);
            b.add(VertexKind::Finite { path }, name, &visits);
        }
        for circuit in primitive_cocomplete(t) {
            let cycle = canonical_rotation(t, &circuit.primitive);
            let arrows = deleted(t, cycle.arrows());
            let visits: Vec<_> = arrows.iter().map(|&a| (q.source(a), Angle::Arrow(a))).collect();
            let name = label(t, q.source(arrows[0]), arrows);
            b.add(VertexKind::Infinite { cycle }, name, &visits);
        }
        for v in 0..q.vertex_count() {
            if trivial_vertex(t, v) {
                let name = t.show(&Path::trivial(v));
                b.add(VertexKind::Trivial { vertex: v }, name, &[(v, Angle::Marked)]);
            }
        }
        for arrow in t.special_loops() {
            let name = q.arrow(arrow).id.clone();
            b.add(VertexKind::Special { arrow }, name, &[(q.source(arrow), Angle::Special(arrow))]);
        }

        let mut by_edge = vec![Vec::new(); q.vertex_count()];
        for (h, he) in b.half_edges.iter().enumerate() {
            by_edge[he.edge].push(h);
        }
        let mut partner = vec![0; b.half_edges.len()];
        for (edge, hs) in by_edge.iter().enumerate() {
            if hs.len() != 2 {
                return Err(GeometryError::EdgeValency {
                    edge: q.vertex_name(edge).to_string(),
                    count: hs.len(),
                });
            }
            partner[hs[0]] = hs[1];
            partner[hs[1]] = hs[0];
        }
        Ok(RibbonGraph {
            vertices: b.vertices,
            half_edges: b.half_edges,
            partner,
            edge_count: q.vertex_count(),
        })
    }

    /// `σ`: the cyclic successor of a half-edge at its vertex.
    pub fn sigma(&self, h: usize) -> usize {
        let hs = &self.vertices[self.half_edges[h].vertex].half_edges;
        let k = hs.iter().position(|&x| x == h).expect("half-edge at its vertex");
        hs[(k + 1) % hs.len()]
    }

    /// `ι`.
    pub fn iota(&self, h: usize) -> usize {
        self.partner[h]
    }

    /// The half-edges starting a marked angle.
    pub fn marked_angles(&self) -> Vec<usize> {
        (0..self.half_edges.len())
            .filter(|&h| self.half_edges[h].angle == Angle::Marked)
            .collect()
    }

    /// A deterministic plain-text listing: one line per vertex with its
    /// half-edges (edge name and angle) in cyclic order.
    pub fn listing(&self, t: &SkewGentleTriple) -> String {
        let q = t.quiver();
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let kind = match v.kind {
                VertexKind::Finite { .. } => "finite",
                VertexKind::Infinite { .. } => "infinite",
                VertexKind::Trivial { .. } => "trivial",
                VertexKind::Special { .. } => "special",
            };
            let angles: Vec<String> = v
                .half_edges
                .iter()
                .map(|&h| {
                    let he = &self.half_edges[h];
                    let angle = match he.angle {
                        Angle::Marked => "marked".to_string(),
                        Angle::Arrow(a) => format!("{}:{}", q.arrow(a).id, q.degree(a)),
                        Angle::Special(a) => format!("{}:0", q.arrow(a).id),
                    };
                    format!("{}[{}]", q.vertex_name(he.edge), angle)
                })
                .collect();
            let _ = writeln!(out, "v{i} {kind} {}: {}", v.label, angles.join(" "));
        }
        out
    }
}
