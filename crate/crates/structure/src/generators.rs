//! Algebra generators `c1 … c5` of `HH*(A)` and the relation set `ℛ`, with
//! the bespoke presentations of the excluded one-loop quivers.

use std::fmt;

use skewgentle_complex::Cochain;
use skewgentle_core::{Path, SkewGentleTriple};
use skewgentle_enumerate::enumerate_b;

use crate::basis::{ClassTag, GeneratorTag, Inventory, Payload};
use crate::cup::cup;
use crate::error::StructureError;
use crate::shape::{OneLoopCase, QuiverShape};

/// The generating set `𝒢`: `c1` the pairs `(s(α), α)` with `α` a
/// `ℬ`-maximal cycle; `c2` the sums `⟨⟨α⟩⟩ₛ`, `α ∈ C̄ᵇᵃˢⁱᶜ(ℬ)`; `c3` the
/// pairs `(c, c)`, `c ∉ T ∪ Sp`; `c4` the pairs `(γ, α)` with `γ`
/// `Γ`-maximal and `γ`, `α` sharing neither first nor last arrow; `c5` the
/// sums `⟨⟨C⟩⟩_gr`, `C ∈ C̄ᵇᵃˢⁱᶜ(Γ) ∖ Spᵇᵃˢⁱᶜ`.  The family `c4` can be
/// infinite; only `α` of length at most `max_len` are listed.
///
/// One vertex with a special loop `ε` gives `{(s(ε), ε)}`; in the three
/// gentle one-loop cases where `(a, a)` is a product of other generators it
/// is omitted.
pub fn algebra_generators(t: &SkewGentleTriple, max_len: usize) -> Vec<GeneratorTag> {
    algebra_generators_with(t, &Inventory::new(t), max_len)
}

/// [`algebra_generators`] with a precomputed inventory.
pub fn algebra_generators_with(
    t: &SkewGentleTriple,
    inv: &Inventory,
    max_len: usize,
) -> Vec<GeneratorTag> {
    let q = t.quiver();
    if let QuiverShape::OneLoop {
        arrow,
        case: OneLoopCase::Special,
    } = inv.shape
    {
        return vec![GeneratorTag::new(
            t,
            ClassTag::C1,
            Payload::Maximal {
                alpha: Path::arrow(q, arrow),
            },
        )];
    }
    let mut out = Vec::new();
    for alpha in &inv.b_maximal_cycles {
        out.push(GeneratorTag::new(
            t,
            ClassTag::C1,
            Payload::Maximal {
                alpha: alpha.clone(),
            },
        ));
    }
    for f in &inv.catalog.closure_b {
        out.push(GeneratorTag::new(
            t,
            ClassTag::C2,
            Payload::CocompleteSum {
                circuit: f.circuit.clone(),
                exponent: f.step,
            },
        ));
    }
    let drop_derivation = matches!(
        inv.shape,
        QuiverShape::OneLoop { case, .. } if case.drops_derivation()
    );
    if !drop_derivation {
        for &c in &inv.derivation_arrows {
            out.push(GeneratorTag::new(t, ClassTag::C3, Payload::Derivation { arrow: c }));
        }
    }
    let b_paths = enumerate_b(t, max_len);
    for gamma in &inv.gamma_maximal {
        for alpha in b_paths.iter().filter(|a| a.is_parallel(q, gamma)) {
            if alpha.first_arrow().is_some_and(|a| Some(a) == gamma.first_arrow())
                || alpha.last_arrow().is_some_and(|a| Some(a) == gamma.last_arrow())
            {
                continue;
            }
            out.push(GeneratorTag::new(
                t,
                ClassTag::C4,
                Payload::MaximalPair {
                    gamma: gamma.clone(),
                    alpha: alpha.clone(),
                },
            ));
        }
    }
    for f in inv.complete_families(t) {
        out.push(GeneratorTag::new(
            t,
            ClassTag::C5,
            Payload::CompleteSum {
                circuit: f.circuit.clone(),
                exponent: f.step,
            },
        ));
    }
    out
}

/// An element of the relation ideal, by generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `u ⌣ v`.
    Product { left: usize, right: usize },
    /// `(c,c) ⌣ X − (d,d) ⌣ X` for a circuit generator `X` through both
    /// arrows.
    Difference {
        first: usize,
        second: usize,
        cycle: usize,
    },
    /// `u ⌣ u − u`.
    Idempotent { generator: usize },
}

impl Relation {
    /// The cochain that must represent the zero class.
    pub fn element(&self, t: &SkewGentleTriple, gens: &[GeneratorTag]) -> Cochain {
        let rep = |i: usize| &gens[i].representative;
        match *self {
            Relation::Product { left, right } => cup(t, rep(left), rep(right)),
            Relation::Difference {
                first,
                second,
                cycle,
            } => cup(t, rep(first), rep(cycle)).sub(&cup(t, rep(second), rep(cycle))),
            Relation::Idempotent { generator } => {
                cup(t, rep(generator), rep(generator)).sub(rep(generator))
            }
        }
    }

    /// Short form by generator classes, e.g. `c2⌣c4`.
    pub fn label(&self, gens: &[GeneratorTag]) -> String {
        let c = |i: usize| gens[i].class.name();
        match *self {
            Relation::Product { left, right } => format!("{}⌣{}", c(left), c(right)),
            Relation::Difference {
                first,
                second,
                cycle,
            } => format!("{}⌣{} − {}⌣{}", c(first), c(cycle), c(second), c(cycle)),
            Relation::Idempotent { generator } => format!("{}⌣{} − {}", c(generator), c(generator), c(generator)),
        }
    }

    /// Full form with generator payloads.
    pub fn describe(&self, t: &SkewGentleTriple, gens: &[GeneratorTag]) -> String {
        let d = |i: usize| gens[i].payload.describe(t);
        match *self {
            Relation::Product { left, right } => format!("{} ⌣ {}", d(left), d(right)),
            Relation::Difference {
                first,
                second,
                cycle,
            } => format!(
                "{} ⌣ {} − {} ⌣ {}",
                d(first),
                d(cycle),
                d(second),
                d(cycle)
            ),
            Relation::Idempotent { generator } => {
                format!("{} ⌣ {} − {}", d(generator), d(generator), d(generator))
            }
        }
    }

    /// Indices of the generators involved.
    pub fn generators(&self) -> Vec<usize> {
        match *self {
            Relation::Product { left, right } => vec![left, right],
            Relation::Difference {
                first,
                second,
                cycle,
            } => vec![first, second, cycle],
            Relation::Idempotent { generator } => vec![generator],
        }
    }
}

/// A presentation of `HH*(A)` as a quotient of the free graded-commutative
/// algebra on `generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<GeneratorTag>,
    pub relations: Vec<Relation>,
    /// Set for the excluded one-loop quivers, whose presentation is the
    /// bespoke one rather than the general theorem's.
    pub exceptional: Option<OneLoopCase>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self
            .relations
            .iter()
            .map(|r| r.label(&self.generators))
            .collect();
        write!(f, "{{{}}}", labels.join(", "))
    }
}

/// The exceptional case, if the general relation theorem excludes `t`.
fn excluded_case(inv: &Inventory) -> Option<OneLoopCase> {
    match inv.shape {
        QuiverShape::OneLoop { case, .. } if case == OneLoopCase::Special || case.drops_derivation() => {
            Some(case)
        }
        _ => None,
    }
}

/// The relation set `ℛ` of the general theorem for the given generators:
/// every product `u ⌣ v` (unordered, `u = v` allowed) except self-products
/// of `c2` and `c5` generators and products of a circuit generator with
/// `(c, c)` for an arrow `c` it passes through; plus, for each circuit
/// generator `X` through two distinct arrows `c ≠ d` of `Q₁ ∖ (T ∪ Sp)`,
/// the difference `(c,c)⌣X − (d,d)⌣X`.
///
/// Fails with [`StructureError::ExceptionalQuiver`] for the excluded
/// one-loop quivers (see [`presentation`]).
pub fn algebra_relations(
    t: &SkewGentleTriple,
    gens: &[GeneratorTag],
) -> Result<Vec<Relation>, StructureError> {
    let inv = Inventory::new(t);
    if let Some(case) = excluded_case(&inv) {
        return Err(StructureError::ExceptionalQuiver(format!(
            "one vertex with one loop ({case:?})"
        )));
    }
    Ok(general_relations(gens))
}

fn through(g: &GeneratorTag, c: &GeneratorTag) -> bool {
    let Payload::Derivation { arrow } = c.payload else {
        return false;
    };
    matches!(g.class, ClassTag::C2 | ClassTag::C5)
        && g.payload.circuit().is_some_and(|(circ, _)| circ.passes_through(arrow))
}

fn general_relations(gens: &[GeneratorTag]) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let (u, v) = (&gens[i], &gens[j]);
            let exempt = (i == j && matches!(u.class, ClassTag::C2 | ClassTag::C5))
                || through(u, v)
                || through(v, u);
            if !exempt {
                out.push(Relation::Product { left: i, right: j });
            }
        }
    }
    for (x, g) in gens.iter().enumerate() {
        if !matches!(g.class, ClassTag::C2 | ClassTag::C5) {
            continue;
        }
        let arrows: Vec<usize> = (0..gens.len()).filter(|&k| through(g, &gens[k])).collect();
        for (a, &c) in arrows.iter().enumerate() {
            for &d in &arrows[a + 1..] {
                out.push(Relation::Difference {
                    first: c,
                    second: d,
                    cycle: x,
                });
            }
        }
    }
    out
}

/// Generators and relations, routing the excluded one-loop quivers to their
/// bespoke presentations: a special loop gives `(s(ε),ε)⌣(s(ε),ε) =
/// (s(ε),ε)`; `a² ∈ R` (with `char 𝕂 = 2` or `|a|` odd) gives
/// `(s(a),a)⌣(s(a),a) = 0`; `a² ∉ R` (with `char 𝕂 = 2` or `|a|` even)
/// gives `(a,s(a))⌣(a,s(a)) = 0`.
pub fn presentation(t: &SkewGentleTriple, max_len: usize) -> Presentation {
    let inv = Inventory::new(t);
    let generators = algebra_generators_with(t, &inv, max_len);
    let Some(case) = excluded_case(&inv) else {
        let relations = general_relations(&generators);
        return Presentation {
            generators,
            relations,
            exceptional: None,
        };
    };
    let find = |class: ClassTag| {
        generators
            .iter()
            .position(|g| g.class == class)
            .expect("one-loop generator present")
    };
    let relations = match case {
        OneLoopCase::Special => vec![Relation::Idempotent {
            generator: find(ClassTag::C1),
        }],
        OneLoopCase::SquareZeroOddOrCharTwo => {
            let g = find(ClassTag::C1);
            vec![Relation::Product { left: g, right: g }]
        }
        _ => {
            let g = find(ClassTag::C4);
            vec![Relation::Product { left: g, right: g }]
        }
    };
    Presentation {
        generators,
        relations,
        exceptional: Some(case),
    }
}
