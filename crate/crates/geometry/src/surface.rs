//! Faces of the ribbon graph and the invariants of the orbifold surface.

use skewgentle_core::{ArrowId, SkewGentleTriple};

use crate::error::GeometryError;
use crate::ribbon::{Angle, RibbonGraph};

/// One face of `G`: an orbit of `σ∘ι`, recorded by the half-edges starting
/// its angles in traversal order (starting right after a marked angle when
/// there is one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub angles: Vec<usize>,
    pub markings: usize,
}

impl Face {
    /// The arrows of the unmarked, non-special angles in traversal order.
    pub fn arrows(&self, g: &RibbonGraph) -> Vec<ArrowId> {
        self.angles
            .iter()
            .filter_map(|&h| match g.half_edges[h].angle {
                Angle::Arrow(a) => Some(a),
                _ => None,
            })
            .collect()
    }
}

/// The combinatorial surface of a ribbon graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub faces: Vec<Face>,
    /// Number of faces.
    pub boundary_components: usize,
    /// Total number of markings (marked points on the boundary).
    pub marked_points: usize,
    /// Vertices of `G` given by relation-free cycles (interior marked points).
    pub g_punctures: usize,
    /// Faces without markings.
    pub g_star_punctures: usize,
    /// Special vertices.
    pub orbifold_points: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
    /// `|Q₁ ∖ Sp| − |Q₀| + 1`, the rank of the fundamental group of the
    /// surface of the gentle algebra obtained by deleting the special loops.
    pub pi1_rank: usize,
    /// `|Q₁| − |Q₀| + 1`, the same count with the special loops kept; it
    /// differs from `pi1_rank` exactly when `Sp` is nonempty.
    pub pi1_rank_all_arrows: usize,
}

impl SurfaceModel {
    /// `(b, marked points, G-punctures, G*-punctures, orbifold points, g)`.
    pub fn summary(&self) -> (usize, usize, usize, usize, usize, usize) {
        (
            self.boundary_components,
            self.marked_points,
            self.g_punctures,
            self.g_star_punctures,
            self.orbifold_points,
            self.genus,
        )
    }
}

/// Traces the faces: the angle traversed when leaving `h` is the one
/// starting at `ι(h)`, and the next half-edge is `σ(ι(h))`.
pub fn faces(g: &RibbonGraph) -> Vec<Face> {
    let n = g.half_edges.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut angles = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            let x = g.iota(h);
            angles.push(x);
            h = g.sigma(x);
        }
        let markings = angles
            .iter()
            .filter(|&&x| g.half_edges[x].angle == Angle::Marked)
            .count();
        if let Some(k) = angles.iter().position(|&x| g.half_edges[x].angle == Angle::Marked) {
            angles.rotate_left(k + 1);
        }
        out.push(Face { angles, markings });
    }
    out
}

fn connected(g: &RibbonGraph) -> bool {
    let mut seen = vec![false; g.vertices.len()];
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        for &h in &g.vertices[v].half_edges {
            stack.push(g.half_edges[g.iota(h)].vertex);
        }
    }
    seen.into_iter().all(|s| s)
}

/// Faces, punctures, orbifold points, Euler characteristic, genus and the
/// fundamental-group rank.
pub fn surface_invariants(t: &SkewGentleTriple, g: &RibbonGraph) -> Result<SurfaceModel, GeometryError> {
    if g.vertices.is_empty() || !connected(g) {
        return Err(GeometryError::Disconnected);
    }
    let faces = faces(g);
    let euler = g.vertices.len() as i64 - g.edge_count as i64;
    let b = faces.len();
    let twice_genus = 2 - euler - b as i64;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(GeometryError::NonIntegerGenus { euler, faces: b });
    }
    let q = t.quiver();
    let nonspecial = q.arrow_count() - t.special_loops().len();
    Ok(SurfaceModel {
        boundary_components: b,
        marked_points: faces.iter().map(|f| f.markings).sum(),
        g_punctures: g.vertices.iter().filter(|v| v.is_infinite()).count(),
        g_star_punctures: faces.iter().filter(|f| f.markings == 0).count(),
        orbifold_points: g.vertices.iter().filter(|v| v.is_special()).count(),
        euler_characteristic: euler,
        genus: (twice_genus / 2) as usize,
        pi1_rank: (nonspecial + 1).saturating_sub(q.vertex_count()),
        pi1_rank_all_arrows: (q.arrow_count() + 1).saturating_sub(q.vertex_count()),
        faces,
    })
}
