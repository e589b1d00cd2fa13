//! Expected cup products of basis classes (the general table, and the
//! one-loop tables), expected generator brackets, and the structure-constant
//! table of `⌣` and `[−,−]` in closed-form basis coordinates.

use std::collections::BTreeMap;

use skewgentle_complex::Cochain;
use skewgentle_core::{Scalar, SkewGentleTriple};

use crate::basis::{GeneratorTag, Inventory, Payload};
use crate::circ::{arrow_count, bracket, deg_c};
use crate::cup::cup;
use crate::error::StructureError;
use crate::exceptional::{loop_pair, loop_shape, one_loop_bracket_listed, one_loop_cup_listed};
use crate::shape::QuiverShape;
use crate::window::{ClassBasis, CohomologyWindow};

fn rank(p: &Payload) -> u8 {
    match p {
        Payload::Unit => 1,
        Payload::Maximal { .. } => 2,
        Payload::CocompleteSum { .. } => 3,
        Payload::Derivation { .. } => 4,
        Payload::GluedCocomplete { .. } => 5,
        Payload::MaximalPair { .. } => 6,
        Payload::CompleteSum { .. } => 7,
        Payload::GluedComplete { .. } => 8,
    }
}

/// The general table in its listed orientation; `None` when the ordered
/// pair is only determined by graded commutativity.
fn general_listed(t: &SkewGentleTriple, x: &Payload, y: &Payload) -> Option<Cochain> {
    let q = t.quiver();
    let f = t.field();
    let zero = || Some(Cochain::zero(f, x.external_degree() + y.external_degree()));
    match (x, y) {
        (Payload::Maximal { .. }, _) | (_, Payload::Maximal { .. }) => zero(),
        (
            Payload::CocompleteSum { circuit: c1, exponent: k1 },
            Payload::CocompleteSum { circuit: c2, exponent: k2 },
        ) => {
            if c1 != c2 {
                return zero();
            }
            Some(
                Payload::CocompleteSum {
                    circuit: c1.clone(),
                    exponent: k1 + k2,
                }
                .representative(t),
            )
        }
        (
            Payload::CocompleteSum { circuit: c1, exponent: k1 },
            Payload::GluedCocomplete { circuit: c2, exponent: k2 },
        ) => {
            if c1 != c2 {
                return zero();
            }
            Some(
                Payload::GluedCocomplete {
                    circuit: c1.clone(),
                    exponent: k1 + k2,
                }
                .representative(t),
            )
        }
        (Payload::CocompleteSum { circuit, exponent }, Payload::Derivation { arrow }) => {
            if !circuit.passes_through(*arrow) {
                return zero();
            }
            Some(
                Payload::GluedCocomplete {
                    circuit: circuit.clone(),
                    exponent: *exponent,
                }
                .representative(t),
            )
        }
        (
            Payload::CocompleteSum { .. },
            Payload::MaximalPair { .. } | Payload::CompleteSum { .. } | Payload::GluedComplete { .. },
        ) => zero(),
        (
            Payload::GluedCocomplete { .. },
            Payload::Derivation { .. }
            | Payload::GluedCocomplete { .. }
            | Payload::MaximalPair { .. }
            | Payload::CompleteSum { .. }
            | Payload::GluedComplete { .. },
        ) => zero(),
        (
            Payload::Derivation { .. },
            Payload::Derivation { .. } | Payload::MaximalPair { .. } | Payload::GluedComplete { .. },
        ) => zero(),
        (Payload::Derivation { arrow }, Payload::CompleteSum { circuit, exponent }) => {
            if !circuit.passes_through(*arrow) {
                return zero();
            }
            let c = circuit.power(*exponent);
            let d = c.first_arrow().expect("nontrivial cycle");
            let glued = Payload::GluedComplete {
                circuit: circuit.clone(),
                exponent: *exponent,
            }
            .representative(t);
            Some(glued.scale(&f.sign(q.degree(d) * c.degree(q))))
        }
        (Payload::MaximalPair { .. }, _) => zero(),
        (
            Payload::CompleteSum { circuit: c1, exponent: k1 },
            Payload::CompleteSum { circuit: c2, exponent: k2 },
        ) => {
            if c1 != c2 {
                return zero();
            }
            let (l1, l2) = (c1.period() * k1, c2.period() * k2);
            let sum = Payload::CompleteSum {
                circuit: c1.clone(),
                exponent: k1 + k2,
            }
            .representative(t);
            Some(sum.scale(&f.sign((l1 * l2) as i64)))
        }
        (
            Payload::GluedComplete { circuit: c1, exponent: k1 },
            Payload::CompleteSum { circuit: c2, exponent: k2 },
        ) => {
            if c1 != c2 {
                return zero();
            }
            let c = c1.power(*k1);
            let b = c.first_arrow().expect("nontrivial cycle");
            let (l1, l2) = ((c1.period() * k1) as i64, (c2.period() * k2) as i64);
            let glued = Payload::GluedComplete {
                circuit: c1.clone(),
                exponent: k1 + k2,
            }
            .representative(t);
            Some(glued.scale(&f.sign((q.degree(b) + l1) * l2)))
        }
        (Payload::GluedComplete { .. }, Payload::GluedComplete { .. }) => zero(),
        _ => None,
    }
}

/// One-loop tables in their listed orientation.
fn one_loop_listed(
    t: &SkewGentleTriple,
    arrow: usize,
    case: crate::shape::OneLoopCase,
    x: &GeneratorTag,
    y: &GeneratorTag,
) -> Option<Cochain> {
    let f = t.field();
    let (sx, sy) = (loop_shape(&x.representative)?, loop_shape(&y.representative)?);
    match one_loop_cup_listed(case, sx, sy)? {
        None => Some(Cochain::zero(f, x.n + y.n)),
        Some((e, p, q)) => Some(loop_pair(t, arrow, p, q).scale(&f.sign(e))),
    }
}

/// The expected class of `x ⌣ y` for two closed-form basis elements, as an
/// explicit cocycle: the general table (also valid on the Kronecker
/// quiver) or the one-loop tables, completed by the unit law and graded
/// commutativity `y ⌣ x = (−1)^{N_x N_y} x ⌣ y`.
pub fn expected_cup(
    t: &SkewGentleTriple,
    inv: &Inventory,
    x: &GeneratorTag,
    y: &GeneratorTag,
) -> Result<Cochain, StructureError> {
    if x.payload == Payload::Unit {
        return Ok(y.representative.clone());
    }
    if y.payload == Payload::Unit {
        return Ok(x.representative.clone());
    }
    let listed = |u: &GeneratorTag, v: &GeneratorTag| match inv.shape {
        QuiverShape::OneLoop { arrow, case } => one_loop_listed(t, arrow, case, u, v),
        _ => general_listed(t, &u.payload, &v.payload),
    };
    if let Some(c) = listed(x, y) {
        return Ok(c);
    }
    if let Some(c) = listed(y, x) {
        return Ok(c.scale(&t.field().sign(x.total * y.total)));
    }
    Err(StructureError::ExceptionalQuiver(format!(
        "no table entry for {} ⌣ {} (ranks {}, {})",
        x.describe(t),
        y.describe(t),
        rank(&x.payload),
        rank(&y.payload)
    )))
}

/// The expected bracket `[u, v]` of two algebra generators as an explicit
/// cocycle.  General quivers: `[(c,c), v] = deg_c(v)·v`, the mirrored
/// entry by shifted antisymmetry, and zero otherwise.  One loop: the listed
/// brackets (and their mirrors), zero otherwise.  The Kronecker quiver is
/// handled separately (its listed generators differ from `𝒢`).
pub fn expected_bracket(
    t: &SkewGentleTriple,
    inv: &Inventory,
    u: &GeneratorTag,
    v: &GeneratorTag,
) -> Result<Cochain, StructureError> {
    let f = t.field();
    let degree = (u.n + v.n).saturating_sub(1);
    let mirror = f.sign((u.total - 1) * (v.total - 1) + 1);
    if let QuiverShape::OneLoop { arrow, case } = inv.shape {
        let shapes = (loop_shape(&u.representative), loop_shape(&v.representative));
        let (Some(su), Some(sv)) = shapes else {
            return Ok(Cochain::zero(f, degree));
        };
        if let Some((c, p, q)) = one_loop_bracket_listed(case, su, sv) {
            return Ok(loop_pair(t, arrow, p, q).scale(&f.from_int(c)));
        }
        if let Some((c, p, q)) = one_loop_bracket_listed(case, sv, su) {
            return Ok(loop_pair(t, arrow, p, q).scale(&(&f.from_int(c) * &mirror)));
        }
        return Ok(Cochain::zero(f, degree));
    }
    if let Payload::Derivation { arrow } = u.payload {
        return Ok(derivation_action(t, arrow, v));
    }
    if let Payload::Derivation { arrow } = v.payload {
        return Ok(derivation_action(t, arrow, u).scale(&mirror));
    }
    Ok(Cochain::zero(f, degree))
}

/// The expected class of `u ∘ v` for two algebra generators of a general
/// quiver: `(d,d) ∘ v` multiplies each pair `(η, β)` of `v` by the number
/// of occurrences of `d` in `β`; `(γ′,α′) ∘ (c,c)` and `⟨⟨D⟩⟩_gr ∘ (c,c)`
/// multiply `u` by the number of occurrences of `c` in `γ′` or `D`; every
/// other generator composite is zero.
///
/// `None` when `u = (γ,α)` with `l(γ) = 1` and `α` beginning or ending with
/// a special loop, and `v` is not a derivation: grafting `α` into a path
/// `εγε′` of `v` gives `εαε′ = α` by idempotence of the special loops, so
/// the composite need not vanish and no closed form is claimed.
pub fn expected_circ(t: &SkewGentleTriple, u: &GeneratorTag, v: &GeneratorTag) -> Option<Cochain> {
    let f = t.field();
    let degree = (u.n + v.n).saturating_sub(1);
    if let (Payload::MaximalPair { gamma, alpha }, false) =
        (&u.payload, matches!(v.payload, Payload::Derivation { .. }))
    {
        let special_end = [alpha.first_arrow(), alpha.last_arrow()]
            .into_iter()
            .flatten()
            .any(|a| t.is_special(a));
        if gamma.len() == 1 && special_end {
            return None;
        }
    }
    Some(match (&u.payload, &v.payload) {
        (Payload::Derivation { arrow }, _) => {
            let mut out = Cochain::zero(f, v.n);
            for (p, c) in v.representative.terms() {
                let k = arrow_count(&p.alpha, *arrow);
                out.add_term(p.clone(), c * &f.from_int(k));
            }
            out
        }
        (Payload::MaximalPair { gamma, .. }, Payload::Derivation { arrow }) => {
            u.representative.scale(&f.from_int(arrow_count(gamma, *arrow)))
        }
        (Payload::CompleteSum { circuit, exponent }, Payload::Derivation { arrow }) => {
            let d = circuit.power(*exponent);
            u.representative.scale(&f.from_int(arrow_count(&d, *arrow)))
        }
        _ => Cochain::zero(f, degree),
    })
}

/// `deg_c(v)·v`.
pub fn derivation_action(t: &SkewGentleTriple, c: usize, v: &GeneratorTag) -> Cochain {
    let d = deg_c(&v.representative, c).unwrap_or(0);
    v.representative.scale(&t.field().from_int(d))
}

/// One entry of a structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    /// The zero class.
    Zero,
    /// A nonzero class in block `(n, j)`: coordinates on the closed-form
    /// basis elements (described), nonzero coefficients only.
    Class {
        n: usize,
        j: i64,
        terms: Vec<(String, Scalar)>,
    },
    /// Not computable inside the window.
    Skipped(String),
}

/// Coordinates of `⌣` and `[−,−]` on ordered generator pairs.
#[derive(Clone, Debug)]
pub struct StructureConstantTable {
    pub generators: Vec<GeneratorTag>,
    pub cup: BTreeMap<(usize, usize), Entry>,
    pub bracket: BTreeMap<(usize, usize), Entry>,
}

impl StructureConstantTable {
    /// Computes both tables for the given generators.
    pub fn new(window: &CohomologyWindow, inv: &Inventory, generators: Vec<GeneratorTag>) -> Self {
        let t = window.triple();
        let mut bases: BTreeMap<(usize, i64), Result<ClassBasis, String>> = BTreeMap::new();
        let mut cup_table = BTreeMap::new();
        let mut bracket_table = BTreeMap::new();
        for (i, u) in generators.iter().enumerate() {
            for (k, v) in generators.iter().enumerate() {
                let product = cup(t, &u.representative, &v.representative);
                let entry = entry_of(window, inv, &mut bases, u.n + v.n, u.j + v.j, &product);
                cup_table.insert((i, k), entry);
                let b = bracket(t, &u.representative, &v.representative);
                let entry = if u.n + v.n == 0 {
                    Entry::Zero
                } else {
                    entry_of(window, inv, &mut bases, u.n + v.n - 1, u.j + v.j, &b)
                };
                bracket_table.insert((i, k), entry);
            }
        }
        StructureConstantTable {
            generators,
            cup: cup_table,
            bracket: bracket_table,
        }
    }
}

fn entry_of(
    window: &CohomologyWindow,
    inv: &Inventory,
    bases: &mut BTreeMap<(usize, i64), Result<ClassBasis, String>>,
    n: usize,
    j: i64,
    z: &Cochain,
) -> Entry {
    if z.is_zero() {
        return Entry::Zero;
    }
    let t = window.triple();
    let basis = bases
        .entry((n, j))
        .or_insert_with(|| window.class_basis(inv, n, j).map_err(|e| e.to_string()));
    let basis = match basis {
        Ok(b) => b,
        Err(reason) => return Entry::Skipped(reason.clone()),
    };
    match basis.express(window, z) {
        Ok(coords) => {
            let terms: Vec<(String, Scalar)> = coords
                .into_iter()
                .zip(&basis.elements)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, e)| (e.describe(t), c))
                .collect();
            if terms.is_empty() {
                Entry::Zero
            } else {
                Entry::Class { n, j, terms }
            }
        }
        Err(e) => Entry::Skipped(e.to_string()),
    }
}
