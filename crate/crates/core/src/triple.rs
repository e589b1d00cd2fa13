//! Graded skew-gentle triples `(Q, R, Sp)` and their validation.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::field::FieldSpec;
use crate::path::Path;
use crate::quiver::{Arrow, ArrowId, Quiver, VertexId};

/// An arrow record as it appears in an unvalidated presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawArrow {
    pub id: String,
    pub source: String,
    pub target: String,
    pub degree: i64,
}

/// An unvalidated presentation.  Each relation lists arrow ids written
/// right-to-left: `["b", "a"]` is the path "first `a`, then `b`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPresentation {
    pub characteristic: u64,
    pub vertices: Vec<String>,
    pub arrows: Vec<RawArrow>,
    pub relations: Vec<Vec<String>>,
    pub special: Vec<String>,
}

/// One violated requirement of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("G1 violation: relation {relation} {detail}")]
    G1Violation { relation: String, detail: String },
    #[error("G2 violation: vertex {vertex} has {count} {direction} arrows (at most 2 allowed)")]
    G2Violation {
        vertex: String,
        direction: &'static str,
        count: usize,
    },
    #[error("G3 violation: arrow {arrow} {detail}")]
    G3Violation { arrow: String, detail: String },
    #[error("G4 violation: arrow {arrow} {detail}")]
    G4Violation { arrow: String, detail: String },
    #[error("special arrow {arrow} is not a loop")]
    SpecialLoopNotLoop { arrow: String },
    #[error("special loop {arrow} has degree {degree} (must be 0)")]
    SpecialLoopDegree { arrow: String, degree: i64 },
    #[error("quiver is disconnected: components {components:?}")]
    Disconnected { components: Vec<Vec<String>> },
    #[error("dangling reference: {context} refers to unknown {kind} {id}")]
    DanglingReference {
        context: String,
        kind: &'static str,
        id: String,
    },
    #[error("duplicate {kind} id {id}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("the quiver has no vertices")]
    EmptyQuiver,
}

/// The complete list of violations found in a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ValidationErrors(pub Vec<ValidationError>);

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A validated graded skew-gentle triple together with its coefficient
/// field.  Relations are stored as ordered pairs `(first, second)` of arrows
/// in traversal order, i.e. the written path `second·first`.
#[derive(Clone, Debug)]
pub struct SkewGentleTriple {
    quiver: Quiver,
    relations: BTreeSet<(ArrowId, ArrowId)>,
    special: Vec<bool>,
    field: FieldSpec,
    s_pairs: HashSet<(ArrowId, ArrowId)>,
    free_succ: Vec<Option<ArrowId>>,
    free_pred: Vec<Option<ArrowId>>,
    rel_succ: Vec<Option<ArrowId>>,
    rel_pred: Vec<Option<ArrowId>>,
    special_at: Vec<Option<ArrowId>>,
}

/// Validates a raw presentation, returning every violation found.
pub fn validate_triple(raw: &RawPresentation) -> Result<SkewGentleTriple, ValidationErrors> {
    let mut errors = Vec::new();

    let field = match FieldSpec::new(raw.characteristic) {
        Ok(f) => f,
        Err(_) => {
            errors.push(ValidationError::InvalidCharacteristic(raw.characteristic));
            FieldSpec::RATIONALS
        }
    };

    if raw.vertices.is_empty() {
        errors.push(ValidationError::EmptyQuiver);
    }
    let mut vertex_names: Vec<String> = raw.vertices.clone();
    vertex_names.sort();
    for w in vertex_names.windows(2) {
        if w[0] == w[1] {
            errors.push(ValidationError::DuplicateId {
                kind: "vertex",
                id: w[0].clone(),
            });
        }
    }
    vertex_names.dedup();
    let vindex: BTreeMap<&str, VertexId> = vertex_names
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();

    let mut seen_arrows = BTreeSet::new();
    let mut arrows = Vec::new();
    for a in &raw.arrows {
        if !seen_arrows.insert(a.id.clone()) {
            errors.push(ValidationError::DuplicateId {
                kind: "arrow",
                id: a.id.clone(),
            });
            continue;
        }
        let mut ok = true;
        for (end, name) in [("source", &a.source), ("target", &a.target)] {
            if !vindex.contains_key(name.as_str()) {
                errors.push(ValidationError::DanglingReference {
                    context: format!("{end} of arrow {}", a.id),
                    kind: "vertex",
                    id: name.clone(),
                });
                ok = false;
            }
        }
        if ok {
            arrows.push(Arrow {
                id: a.id.clone(),
                source: vindex[a.source.as_str()],
                target: vindex[a.target.as_str()],
                degree: a.degree,
            });
        }
    }
    let quiver = Quiver::from_parts(vertex_names.clone(), arrows);

    let mut special = vec![false; quiver.arrow_count()];
    let mut seen_special = BTreeSet::new();
    for s in &raw.special {
        if !seen_special.insert(s.clone()) {
            errors.push(ValidationError::DuplicateId {
                kind: "special loop",
                id: s.clone(),
            });
            continue;
        }
        match quiver.arrow_index(s) {
            None => {
                if !seen_arrows.contains(s) {
                    errors.push(ValidationError::DanglingReference {
                        context: "special loop list".into(),
                        kind: "arrow",
                        id: s.clone(),
                    });
                }
            }
            Some(a) => {
                let arrow = quiver.arrow(a);
                if !arrow.is_loop() {
                    errors.push(ValidationError::SpecialLoopNotLoop { arrow: s.clone() });
                }
                if arrow.degree != 0 {
                    errors.push(ValidationError::SpecialLoopDegree {
                        arrow: s.clone(),
                        degree: arrow.degree,
                    });
                }
                special[a] = true;
            }
        }
    }

    let mut relations = BTreeSet::new();
    for rel in &raw.relations {
        let label = format!("[{}]", rel.join(","));
        if rel.len() != 2 {
            errors.push(ValidationError::G1Violation {
                relation: label,
                detail: format!("has length {} instead of 2", rel.len()),
            });
            continue;
        }
        let mut ids = Vec::new();
        for id in rel {
            match quiver.arrow_index(id) {
                Some(a) => ids.push(a),
                None => errors.push(ValidationError::DanglingReference {
                    context: format!("relation {label}"),
                    kind: "arrow",
                    id: id.clone(),
                }),
            }
        }
        if ids.len() != 2 {
            continue;
        }
        let (second, first) = (ids[0], ids[1]);
        if quiver.target(first) != quiver.source(second) {
            errors.push(ValidationError::G1Violation {
                relation: label,
                detail: "is not a path (arrows do not compose)".into(),
            });
            continue;
        }
        if special[first] || special[second] {
            let eps = if special[first] { first } else { second };
            errors.push(ValidationError::G3Violation {
                arrow: quiver.arrow(eps).id.clone(),
                detail: format!("is a special loop appearing in relation {label}"),
            });
        }
        relations.insert((first, second));
    }

    let mut s_pairs: HashSet<(ArrowId, ArrowId)> = relations.iter().copied().collect();
    for (a, &sp) in special.iter().enumerate() {
        if sp && quiver.arrow(a).is_loop() {
            s_pairs.insert((a, a));
        }
    }

    for v in 0..quiver.vertex_count() {
        for (direction, count) in [
            ("outgoing", quiver.outgoing(v).len()),
            ("incoming", quiver.incoming(v).len()),
        ] {
            if count > 2 {
                errors.push(ValidationError::G2Violation {
                    vertex: quiver.vertex_name(v).to_string(),
                    direction,
                    count,
                });
            }
        }
    }

    let n = quiver.arrow_count();
    let mut free_succ = vec![None; n];
    let mut free_pred = vec![None; n];
    let mut rel_succ = vec![None; n];
    let mut rel_pred = vec![None; n];
    for x in 0..n {
        let id = quiver.arrow(x).id.clone();
        let outs = quiver.outgoing(quiver.target(x));
        let (rel, free): (Vec<ArrowId>, Vec<ArrowId>) =
            outs.iter().partition(|&&y| s_pairs.contains(&(x, y)));
        let ins = quiver.incoming(quiver.source(x));
        let (rel_in, free_in): (Vec<ArrowId>, Vec<ArrowId>) =
            ins.iter().partition(|&&z| s_pairs.contains(&(z, x)));
        let names = |v: &[ArrowId]| -> String {
            v.iter()
                .map(|&a| quiver.arrow(a).id.clone())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if rel.len() > 1 {
            errors.push(ValidationError::G3Violation {
                arrow: id.clone(),
                detail: format!("is followed by several arrows in relation: {}", names(&rel)),
            });
        }
        if rel_in.len() > 1 {
            errors.push(ValidationError::G3Violation {
                arrow: id.clone(),
                detail: format!("is preceded by several arrows in relation: {}", names(&rel_in)),
            });
        }
        if free.len() > 1 {
            errors.push(ValidationError::G4Violation {
                arrow: id.clone(),
                detail: format!("is followed by several arrows outside relations: {}", names(&free)),
            });
        }
        if free_in.len() > 1 {
            errors.push(ValidationError::G4Violation {
                arrow: id.clone(),
                detail: format!(
                    "is preceded by several arrows outside relations: {}",
                    names(&free_in)
                ),
            });
        }
        rel_succ[x] = rel.first().copied();
        free_succ[x] = free.first().copied();
        rel_pred[x] = rel_in.first().copied();
        free_pred[x] = free_in.first().copied();
    }

    if quiver.vertex_count() > 1 {
        let components = connected_components(&quiver);
        if components.len() > 1 {
            errors.push(ValidationError::Disconnected {
                components: components
                    .into_iter()
                    .map(|c| c.into_iter().map(|v| quiver.vertex_name(v).to_string()).collect())
                    .collect(),
            });
        }
    }

    if !errors.is_empty() {
        return Err(ValidationErrors(errors));
    }

    let mut special_at = vec![None; quiver.vertex_count()];
    for (a, &sp) in special.iter().enumerate() {
        if sp {
            special_at[quiver.source(a)] = Some(a);
        }
    }

    Ok(SkewGentleTriple {
        quiver,
        relations,
        special,
        field,
        s_pairs,
        free_succ,
        free_pred,
        rel_succ,
        rel_pred,
        special_at,
    })
}

fn connected_components(q: &Quiver) -> Vec<Vec<VertexId>> {
    let n = q.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for a in q.arrows() {
        let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
        if x != y {
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut comps: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        comps.entry(r).or_default().push(v);
    }
    comps.into_values().collect()
}

impl SkewGentleTriple {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// The same presentation over another coefficient field.
    pub fn with_field(&self, field: FieldSpec) -> SkewGentleTriple {
        let mut t = self.clone();
        t.field = field;
        t
    }

    /// Relations `R` as `(first, second)` pairs in traversal order.
    pub fn relations(&self) -> &BTreeSet<(ArrowId, ArrowId)> {
        &self.relations
    }

    pub fn is_special(&self, a: ArrowId) -> bool {
        self.special[a]
    }

    /// Special loops in id order.
    pub fn special_loops(&self) -> Vec<ArrowId> {
        (0..self.quiver.arrow_count())
            .filter(|&a| self.special[a])
            .collect()
    }

    /// The special loop at `v`, if any.
    pub fn special_at(&self, v: VertexId) -> Option<ArrowId> {
        self.special_at[v]
    }

    /// Whether walking `first` then `second` is a path in `R`.
    pub fn in_r(&self, first: ArrowId, second: ArrowId) -> bool {
        self.relations.contains(&(first, second))
    }

    /// Whether walking `first` then `second` is a path in
    /// `S = R ∪ {ε² | ε ∈ Sp}`.
    pub fn in_s(&self, first: ArrowId, second: ArrowId) -> bool {
        self.s_pairs.contains(&(first, second))
    }

    /// The unique arrow `y` with `y·x` a path not in `S`.
    pub fn free_successor(&self, x: ArrowId) -> Option<ArrowId> {
        self.free_succ[x]
    }

    /// The unique arrow `z` with `x·z` a path not in `S`.
    pub fn free_predecessor(&self, x: ArrowId) -> Option<ArrowId> {
        self.free_pred[x]
    }

    /// The unique arrow `y` with `y·x ∈ S`.
    pub fn relation_successor(&self, x: ArrowId) -> Option<ArrowId> {
        self.rel_succ[x]
    }

    /// The unique arrow `z` with `x·z ∈ S`.
    pub fn relation_predecessor(&self, x: ArrowId) -> Option<ArrowId> {
        self.rel_pred[x]
    }

    /// Membership in `ℬ`: no length-two subpath lies in `S`.
    pub fn is_b_path(&self, p: &Path) -> bool {
        p.arrows().windows(2).all(|w| !self.in_s(w[0], w[1]))
    }

    /// Membership in `Γ`: every length-two subpath lies in `S`.
    pub fn is_gamma_path(&self, p: &Path) -> bool {
        p.arrows().windows(2).all(|w| self.in_s(w[0], w[1]))
    }

    /// If `p = εⁿ` for a special loop `ε` and `n ≥ 1`, returns `ε`.
    pub fn special_power_of(&self, p: &Path) -> Option<ArrowId> {
        let first = p.first_arrow()?;
        if self.special[first] && p.arrows().iter().all(|&a| a == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Renders a path using the quiver's ids.
    pub fn show(&self, p: &Path) -> String {
        p.display(&self.quiver)
    }

    /// Reconstructs the raw presentation (ids sorted).
    pub fn to_raw(&self) -> RawPresentation {
        let q = &self.quiver;
        RawPresentation {
            characteristic: self.field.characteristic(),
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| RawArrow {
                    id: a.id.clone(),
                    source: q.vertex_name(a.source).to_string(),
                    target: q.vertex_name(a.target).to_string(),
                    degree: a.degree,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(first, second)| vec![q.arrow(second).id.clone(), q.arrow(first).id.clone()])
                .collect(),
            special: self
                .special_loops()
                .into_iter()
                .map(|a| q.arrow(a).id.clone())
                .collect(),
        }
    }
}
