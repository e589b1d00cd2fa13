//! The generator ↔ surface correspondence: boundary components with one
//! marked point, `G`-punctures and `G*`-punctures are paired with the
//! algebra generators `c1`/`c4`, `c2` and `c5`, and the rank of `π₁` with
//! the number of derivation generators `c3`.

use std::fmt;

use skewgentle_core::{ArrowId, Path, SkewGentleTriple};
use skewgentle_structure::{algebra_generators, ClassTag, GeneratorTag, Inventory, Payload};

use crate::error::GeometryError;
use crate::ribbon::{RibbonGraph, VertexKind};
use crate::surface::{surface_invariants, SurfaceModel};
use crate::winding::{puncture_multiplier, winding_number, CurveClass};

/// One feature of the surface paired with a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    /// E.g. `boundary face 0` or `G-puncture v3`.
    pub feature: String,
    pub curve: CurveClass,
    pub winding: i64,
    /// `w + 1` on boundaries, `i·w` on punctures.
    pub expected_total: i64,
    pub generator: String,
    pub total: i64,
}

impl Pairing {
    pub fn degrees_match(&self) -> bool {
        self.expected_total == self.total
    }
}

/// Something that failed to pair or to match in degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub feature: String,
    pub detail: String,
}

/// The outcome of [`correspondence_check`].
#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub surface: SurfaceModel,
    pub pairings: Vec<Pairing>,
    pub discrepancies: Vec<Discrepancy>,
    /// Boundary components with exactly one marked point.
    pub boundary_one_mark: usize,
    /// `|Q₁ ∖ (T ∪ Sp)|`, the number of derivation generators before any
    /// are dropped as products.
    pub derivation_generators: usize,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    /// `(boundary, G-punctures, G*-punctures, π₁ rank)`.
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (
            self.boundary_one_mark,
            self.surface.g_punctures,
            self.surface.g_star_punctures,
            self.surface.pi1_rank,
        )
    }

    /// [`CorrespondenceMismatch`](GeometryError::CorrespondenceMismatch)
    /// unless the check passed.
    pub fn ensure(&self) -> Result<(), GeometryError> {
        if self.passed() {
            Ok(())
        } else {
            Err(GeometryError::CorrespondenceMismatch {
                count: self.discrepancies.len(),
            })
        }
    }
}

impl fmt::Display for CorrespondenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (b, g, gs, pi) = self.counts();
        writeln!(
            f,
            "correspondence: {} (boundary:{b}, G-punct:{g}, G*-punct:{gs}, pi1:{pi})",
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        if self.surface.pi1_rank_all_arrows != pi {
            writeln!(
                f,
                "  note: counting special loops would give pi1 rank {}",
                self.surface.pi1_rank_all_arrows
            )?;
        }
        for p in &self.pairings {
            writeln!(
                f,
                "  {} <-> {}  w={} expected total {} got {}",
                p.feature, p.generator, p.winding, p.expected_total, p.total
            )?;
        }
        for d in &self.discrepancies {
            writeln!(f, "  MISMATCH {}: {}", d.feature, d.detail)?;
        }
        Ok(())
    }
}

fn deleted(t: &SkewGentleTriple, p: &Path) -> Vec<ArrowId> {
    p.arrows().iter().copied().filter(|&a| !t.is_special(a)).collect()
}

/// `(γ, α)` with special loops deleted, keeping the endpoints of trivial
/// paths.
type BoundaryKey = (usize, Vec<ArrowId>, usize, Vec<ArrowId>);

fn boundary_key(t: &SkewGentleTriple, gamma: &Path, alpha: &Path) -> BoundaryKey {
    (gamma.source(), deleted(t, gamma), alpha.source(), deleted(t, alpha))
}

/// The least rotation of a cyclic arrow sequence.
fn cyclic_key(arrows: &[ArrowId]) -> Vec<ArrowId> {
    (0..arrows.len().max(1))
        .map(|k| {
            let mut r = arrows.to_vec();
            r.rotate_left(k.min(arrows.len()));
            r
        })
        .min()
        .unwrap_or_default()
}

/// A pool of generators matched one at a time by key.
struct Pool<K> {
    items: Vec<(K, GeneratorTag, bool)>,
}

impl<K: PartialEq> Pool<K> {
    fn take(&mut self, key: &K) -> Option<GeneratorTag> {
        let slot = self.items.iter_mut().find(|(k, _, used)| !used && k == key)?;
        slot.2 = true;
        Some(slot.1.clone())
    }

    fn leftovers(&self) -> impl Iterator<Item = &GeneratorTag> {
        self.items.iter().filter(|(_, _, used)| !used).map(|(_, g, _)| g)
    }
}

/// Builds `G`, its surface, and pairs its features with the algebra
/// generators (paths of length at most `max_len`), checking total degrees.
pub fn correspondence_check(t: &SkewGentleTriple, max_len: usize) -> Result<CorrespondenceReport, GeometryError> {
    let q = t.quiver();
    let g = RibbonGraph::build(t)?;
    let surface = surface_invariants(t, &g)?;
    let inv = Inventory::new(t);
    let gens = algebra_generators(t, max_len);

    let mut boundary = Pool { items: Vec::new() };
    let mut g_pool = Pool { items: Vec::new() };
    let mut g_star_pool = Pool { items: Vec::new() };
    for gen in gens {
        match (&gen.class, &gen.payload) {
            (ClassTag::C1, Payload::Maximal { alpha }) => {
                let key = boundary_key(t, &Path::trivial(alpha.source()), alpha);
                boundary.items.push((key, gen, false));
            }
            (ClassTag::C4, Payload::MaximalPair { gamma, alpha }) => {
                let key = boundary_key(t, gamma, alpha);
                boundary.items.push((key, gen, false));
            }
            (ClassTag::C2, Payload::CocompleteSum { circuit, .. }) => {
                let key = cyclic_key(&deleted(t, &circuit.primitive));
                g_pool.items.push((key, gen, false));
            }
            (ClassTag::C5, Payload::CompleteSum { circuit, .. }) => {
                let key = cyclic_key(&deleted(t, &circuit.primitive));
                g_star_pool.items.push((key, gen, false));
            }
            _ => {}
        }
    }

    let mut pairings = Vec::new();
    let mut discrepancies = Vec::new();
    let mut pair = |feature: String, curve: CurveClass, expected_total: i64, w: i64, gen: Option<GeneratorTag>| {
        match gen {
            Some(gen) => {
                let p = Pairing {
                    feature,
                    curve,
                    winding: w,
                    expected_total,
                    generator: gen.describe(t),
                    total: gen.total,
                };
                if !p.degrees_match() {
                    discrepancies.push(Discrepancy {
                        feature: p.feature.clone(),
                        detail: format!(
                            "{} has total degree {}, expected {}",
                            p.generator, p.total, p.expected_total
                        ),
                    });
                }
                pairings.push(p);
            }
            None => discrepancies.push(Discrepancy {
                feature,
                detail: format!("no generator for {curve:?} (w = {w})"),
            }),
        }
    };

    let mut bare_faces = Vec::new();
    let mut boundary_one_mark = 0;
    for (i, face) in surface.faces.iter().enumerate() {
        match face.markings {
            1 => {
                boundary_one_mark += 1;
                let marked = *face.angles.last().expect("marked angle");
                let alpha = match &g.vertices[g.half_edges[marked].vertex].kind {
                    VertexKind::Finite { path } => path.clone(),
                    VertexKind::Trivial { vertex } => Path::trivial(*vertex),
                    other => unreachable!("marked angle at {other:?}"),
                };
                let arrows = face.arrows(&g);
                let source = arrows.first().map_or(alpha.source(), |&a| q.source(a));
                let gamma = Path::from_raw(source, arrows);
                let key = boundary_key(t, &gamma, &alpha);
                let curve = CurveClass::Boundary { gamma, alpha };
                let w = winding_number(t, &curve);
                pair(format!("boundary face {i}"), curve, w + 1, w, boundary.take(&key));
            }
            0 => {
                let arrows = face.arrows(&g);
                let Some(&first) = arrows.first() else {
                    bare_faces.push(Discrepancy {
                        feature: format!("G*-puncture face {i}"),
                        detail: "face without arrows".into(),
                    });
                    continue;
                };
                let key = cyclic_key(&arrows);
                let curve = CurveClass::GStarPuncture {
                    cycle: Path::from_raw(q.source(first), arrows),
                };
                let w = winding_number(t, &curve);
                let total = puncture_multiplier(t, w) * w;
                pair(format!("G*-puncture face {i}"), curve, total, w, g_star_pool.take(&key));
            }
            _ => {}
        }
    }
    for (i, v) in g.vertices.iter().enumerate() {
        if let VertexKind::Infinite { cycle } = &v.kind {
            let key = cyclic_key(&deleted(t, cycle));
            let curve = CurveClass::GPuncture { cycle: cycle.clone() };
            let w = winding_number(t, &curve);
            let total = puncture_multiplier(t, w) * w;
            pair(format!("G-puncture v{i} {}", v.label), curve, total, w, g_pool.take(&key));
        }
    }

    discrepancies.extend(bare_faces);
    for gen in boundary.leftovers() {
        discrepancies.push(Discrepancy {
            feature: format!("generator {}", gen.describe(t)),
            detail: "no boundary component with one marked point".into(),
        });
    }
    for gen in g_pool.leftovers() {
        discrepancies.push(Discrepancy {
            feature: format!("generator {}", gen.describe(t)),
            detail: "no G-puncture".into(),
        });
    }
    for gen in g_star_pool.leftovers() {
        discrepancies.push(Discrepancy {
            feature: format!("generator {}", gen.describe(t)),
            detail: "no G*-puncture".into(),
        });
    }
    let derivation_generators = inv.derivation_arrows.len();
    if derivation_generators != surface.pi1_rank {
        discrepancies.push(Discrepancy {
            feature: "fundamental group".into(),
            detail: format!(
                "{derivation_generators} derivation generators, rank {}",
                surface.pi1_rank
            ),
        });
    }
    Ok(CorrespondenceReport {
        surface,
        pairings,
        discrepancies,
        boundary_one_mark,
        derivation_generators,
    })
}
