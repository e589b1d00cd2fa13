//! Cocomplete and complete cycles, circuits and their canonical
//! representatives, the closure families `C̄(ℬ)`, `C̄(Γ)` and their basic
//! subsets, plain and special rotation.

use skewgentle_core::{AlgebraElement, ArrowId, Path, SkewGentleTriple};
use thiserror::Error;

/// Which closure condition a circuit satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleKind {
    /// `α² ∈ ℬ`.
    Cocomplete,
    /// `C² ∈ Γ`.
    Complete,
}

/// A primitive circuit, stored through its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    /// Canonical primitive representative.
    pub primitive: Path,
    pub kind: CycleKind,
}

impl Circuit {
    /// The period `r` (length of the primitive representative).
    pub fn period(&self) -> usize {
        self.primitive.len()
    }

    /// `primitiveᵏ`.
    pub fn power(&self, k: usize) -> Path {
        self.primitive.power(k)
    }

    pub fn degree(&self, t: &SkewGentleTriple) -> i64 {
        self.primitive.degree(t.quiver())
    }

    pub fn passes_through(&self, a: ArrowId) -> bool {
        self.primitive.contains_arrow(a)
    }

    /// True for a special loop viewed as a complete cycle.
    pub fn is_special(&self, t: &SkewGentleTriple) -> bool {
        t.special_power_of(&self.primitive).is_some()
    }
}

/// A family `{ρ^{step·m} | m ≥ 1}` of powers of a primitive circuit: the
/// members of `C̄(ℬ)` or `C̄(Γ)` on that circuit.  Its first member
/// `ρ^{step}` is the basic element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleFamily {
    pub circuit: Circuit,
    pub step: usize,
}

impl CycleFamily {
    /// The basic member `ρ^{step}`.
    pub fn basic(&self) -> Path {
        self.circuit.power(self.step)
    }

    /// The `m`-th member `ρ^{step·m}`.
    pub fn member(&self, m: usize) -> Path {
        self.circuit.power(self.step * m)
    }

    /// Exponents `k` (multiples of `step`) with `ρᵏ` of length at most
    /// `max_len`.
    pub fn exponents_up_to_length(&self, max_len: usize) -> Vec<usize> {
        let r = self.circuit.period();
        (1..)
            .map(|m| m * self.step)
            .take_while(|k| k * r <= max_len)
            .collect()
    }
}

/// The catalogue of cycles of a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCatalog {
    /// Primitive cocomplete circuits.
    pub cocomplete: Vec<Circuit>,
    /// Primitive complete circuits, special loops included.
    pub complete: Vec<Circuit>,
    /// `C̄(ℬ)` as families of powers.
    pub closure_b: Vec<CycleFamily>,
    /// `C̄(Γ)` as families of powers (special loops included).
    pub closure_gamma: Vec<CycleFamily>,
    /// `C̄ᵇᵃˢⁱᶜ(ℬ)`.
    pub basic_b: Vec<Path>,
    /// `C̄ᵇᵃˢⁱᶜ(Γ)` (special loops included).
    pub basic_gamma: Vec<Path>,
    /// `Spᵇᵃˢⁱᶜ`: `Sp` in characteristic 2, `Sp² = {ε²}` otherwise.
    pub sp_basic: Vec<Path>,
}

impl CycleCatalog {
    /// Families of `C̄(Γ)` that are not special powers.
    pub fn closure_gamma_nonspecial<'a>(
        &'a self,
        t: &'a SkewGentleTriple,
    ) -> impl Iterator<Item = &'a CycleFamily> + 'a {
        self.closure_gamma
            .iter()
            .filter(move |f| !f.circuit.is_special(t))
    }
}

fn rotations(p: &Path) -> Vec<Vec<ArrowId>> {
    let a = p.arrows();
    (0..a.len())
        .map(|s| a[s..].iter().chain(a[..s].iter()).copied().collect())
        .collect()
}

/// Canonical representative of a cyclic arrow sequence: the
/// lexicographically smallest rotation (traversal order) whose first-walked
/// arrow is not special; if every arrow is special, the smallest rotation.
pub fn canonical_rotation(t: &SkewGentleTriple, cycle: &Path) -> Path {
    let q = t.quiver();
    let rots = rotations(cycle);
    let best = rots
        .iter()
        .filter(|r| !t.is_special(r[0]))
        .min()
        .or_else(|| rots.iter().min())
        .expect("nontrivial cycle")
        .clone();
    Path::from_raw(q.source(best[0]), best)
}

fn collect_cycles(
    t: &SkewGentleTriple,
    next: impl Fn(ArrowId) -> Option<ArrowId>,
    kind: CycleKind,
) -> Vec<Circuit> {
    let q = t.quiver();
    let mut seen = vec![false; q.arrow_count()];
    let mut out = Vec::new();
    for start in 0..q.arrow_count() {
        if seen[start] {
            continue;
        }
        let mut arrows = vec![start];
        let mut cur = start;
        let closed = loop {
            match next(cur) {
                None => break false,
                Some(n) if n == start => break true,
                Some(n) => {
                    if arrows.len() > q.arrow_count() {
                        break false;
                    }
                    arrows.push(n);
                    cur = n;
                }
            }
        };
        if closed {
            for &a in &arrows {
                seen[a] = true;
            }
            let raw = Path::from_raw(q.source(start), arrows);
            out.push(Circuit {
                primitive: canonical_rotation(t, &raw),
                kind,
            });
        }
    }
    out.sort();
    out
}

/// Primitive cocomplete circuits (cycles of the free-successor map).
pub fn primitive_cocomplete(t: &SkewGentleTriple) -> Vec<Circuit> {
    collect_cycles(t, |a| t.free_successor(a), CycleKind::Cocomplete)
}

/// Primitive complete circuits (cycles of the relation-successor map).
pub fn primitive_complete(t: &SkewGentleTriple) -> Vec<Circuit> {
    collect_cycles(t, |a| t.relation_successor(a), CycleKind::Complete)
}

/// Builds the full cycle catalogue.
pub fn cycle_catalog(t: &SkewGentleTriple) -> CycleCatalog {
    let q = t.quiver();
    let char2 = t.field().is_char_two();
    let cocomplete = primitive_cocomplete(t);
    let complete = primitive_complete(t);
    let closure_b: Vec<CycleFamily> = cocomplete
        .iter()
        .map(|c| {
            let even = c.degree(t).rem_euclid(2) == 0;
            CycleFamily {
                circuit: c.clone(),
                step: if even || char2 { 1 } else { 2 },
            }
        })
        .collect();
    let closure_gamma: Vec<CycleFamily> = complete
        .iter()
        .map(|c| {
            let parity = (c.period() as i64 - c.degree(t)).rem_euclid(2) == 0;
            CycleFamily {
                circuit: c.clone(),
                step: if parity || char2 { 1 } else { 2 },
            }
        })
        .collect();
    let basic_b = closure_b.iter().map(|f| f.basic()).collect();
    let basic_gamma = closure_gamma.iter().map(|f| f.basic()).collect();
    let sp_basic = t
        .special_loops()
        .into_iter()
        .map(|e| Path::arrow(q, e).power(if char2 { 1 } else { 2 }))
        .collect();
    CycleCatalog {
        cocomplete,
        complete,
        closure_b,
        closure_gamma,
        basic_b,
        basic_gamma,
        sp_basic,
    }
}

/// Error for rotations of non-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotateError {
    #[error("path is not a cycle")]
    NotACycle,
}

/// Plain or special rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotationMode {
    Plain,
    Special,
}

/// `rot(α)` or `srot(α)` for a cycle `α = aₘ…a₁`.  `srot` equals `rot`
/// unless the leftmost letter `aₘ` is a special loop `ε`, in which case it is
/// `rot(α) − aₘ₋₁…a₁`.
pub fn rotate(
    t: &SkewGentleTriple,
    cycle: &Path,
    mode: RotationMode,
) -> Result<AlgebraElement, RotateError> {
    let q = t.quiver();
    let r = cycle.rot(q).map_err(|_| RotateError::NotACycle)?;
    let mut e = AlgebraElement::from_path(t, &r);
    if mode == RotationMode::Special {
        if let Some(last) = cycle.last_arrow() {
            if t.is_special(last) {
                let rest = cycle.subpath(q, 0, cycle.len() - 1);
                e = e.sub(&AlgebraElement::from_path(t, &rest));
            }
        }
    }
    Ok(e)
}

/// `srotⁱ(α)` computed as `srot(rotⁱ⁻¹(α))` (`srot⁰ = id`).
pub fn srot_pow(t: &SkewGentleTriple, cycle: &Path, i: usize) -> Result<AlgebraElement, RotateError> {
    if i == 0 {
        if !cycle.is_cycle(t.quiver()) {
            return Err(RotateError::NotACycle);
        }
        return Ok(AlgebraElement::from_path(t, cycle));
    }
    let base = cycle
        .rot_pow(t.quiver(), i - 1)
        .map_err(|_| RotateError::NotACycle)?;
    rotate(t, &base, RotationMode::Special)
}

/// Literal iteration `srot(srot(…(α)))`, extending `srot` linearly over the
/// terms produced by earlier steps.
pub fn srot_iterated(
    t: &SkewGentleTriple,
    cycle: &Path,
    i: usize,
) -> Result<AlgebraElement, RotateError> {
    let mut cur = AlgebraElement::from_path(t, cycle);
    for _ in 0..i {
        let mut next = AlgebraElement::zero(t.field());
        for (p, c) in cur.terms() {
            let r = rotate(t, p, RotationMode::Special)?;
            next = next.add(&r.scale(c));
        }
        cur = next;
    }
    Ok(cur)
}
