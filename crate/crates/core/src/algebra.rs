//! The algebra `A = 𝕂Q/⟨R, ε²−ε⟩` on its path basis `ℬ`, and the gentle
//! companion `A′ = 𝕂Q/⟨R, ε²⟩` sharing the same basis.

use std::collections::BTreeMap;

use crate::field::{FieldSpec, Scalar};
use crate::path::Path;
use crate::quiver::ArrowId;
use crate::triple::SkewGentleTriple;

/// The normal form `π(p)` in `A`: collapse every `εε` to `ε`, then return
/// zero (`None`) if a relation of `R` remains as a subpath.  Since the only
/// non-monomial relation is `ε² = ε`, the result is a single basis path or
/// zero.
pub fn normal_form(t: &SkewGentleTriple, p: &Path) -> Option<Path> {
    let arrows = p.arrows();
    if arrows.is_empty() {
        return Some(p.clone());
    }
    let mut collapsed: Vec<ArrowId> = Vec::with_capacity(arrows.len());
    for &a in arrows {
        if t.is_special(a) && collapsed.last() == Some(&a) {
            continue;
        }
        collapsed.push(a);
    }
    if collapsed.windows(2).any(|w| t.in_r(w[0], w[1])) {
        return None;
    }
    Some(Path::from_raw(p.source(), collapsed))
}

/// The normal form `π′(p)` in the gentle companion: zero as soon as any
/// subpath lies in `S`.
pub fn companion_normal_form(t: &SkewGentleTriple, p: &Path) -> Option<Path> {
    if t.is_b_path(p) {
        Some(p.clone())
    } else {
        None
    }
}

/// Which of the two algebras a computation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    /// The skew-gentle algebra `A` (`ε² = ε`).
    SkewGentle,
    /// The gentle companion `A′` (`ε² = 0`).
    Companion,
}

/// Normal form in the chosen algebra.
pub fn reduce(t: &SkewGentleTriple, kind: AlgebraKind, p: &Path) -> Option<Path> {
    match kind {
        AlgebraKind::SkewGentle => normal_form(t, p),
        AlgebraKind::Companion => companion_normal_form(t, p),
    }
}

/// Normal form of the written product `left·right` (walk `right` first).
pub fn reduce_product(
    t: &SkewGentleTriple,
    kind: AlgebraKind,
    left: &Path,
    right: &Path,
) -> Option<Path> {
    let p = Path::mul(t.quiver(), left, right)?;
    reduce(t, kind, &p)
}

/// A finite linear combination of basis paths with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    field: FieldSpec,
    terms: BTreeMap<Path, Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: FieldSpec) -> Self {
        AlgebraElement {
            field,
            terms: BTreeMap::new(),
        }
    }

    /// The element `π(p)`.
    pub fn from_path(t: &SkewGentleTriple, p: &Path) -> Self {
        let mut e = Self::zero(t.field());
        if let Some(b) = normal_form(t, p) {
            e.add_term(b, t.field().one());
        }
        e
    }

    /// A basis path with coefficient one (no reduction applied).
    pub fn basis(field: FieldSpec, p: Path) -> Self {
        let mut e = Self::zero(field);
        e.add_term(p, field.one());
        e
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Path, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Adds `c·p`, dropping the entry if it cancels.
    pub fn add_term(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut r = self.clone();
        for (p, c) in &other.terms {
            r.add_term(p.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let mut r = Self::zero(self.field);
        for (p, x) in &self.terms {
            r.add_term(p.clone(), x * c);
        }
        r
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.scale(&-self.field.one()))
    }

    /// Renders the element as `c·p + …` in basis order.
    pub fn display(&self, t: &SkewGentleTriple) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| {
                if c.is_one() {
                    t.show(p)
                } else {
                    format!("{}*{}", c, t.show(p))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The product `x·y` in `A` (terms of `y` are walked first).
pub fn multiply(t: &SkewGentleTriple, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    multiply_in(t, AlgebraKind::SkewGentle, x, y)
}

/// The product `x·y` in the chosen algebra.
pub fn multiply_in(
    t: &SkewGentleTriple,
    kind: AlgebraKind,
    x: &AlgebraElement,
    y: &AlgebraElement,
) -> AlgebraElement {
    let mut r = AlgebraElement::zero(t.field());
    for (p, a) in x.terms() {
        for (q, b) in y.terms() {
            if let Some(z) = reduce_product(t, kind, p, q) {
                r.add_term(z, a * b);
            }
        }
    }
    r
}
