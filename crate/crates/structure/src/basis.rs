//! The closed-form basis `H_I … H_VIII` of `HH*(A)` and the tags shared by
//! basis elements and algebra generators.

use std::fmt;

use skewgentle_complex::Cochain;
use skewgentle_core::{ArrowId, Path, SkewGentleTriple};
use skewgentle_enumerate::{
    b_paths_between, cycle_catalog, long_b_path_exists, maximal_elements, spanning_tree, Circuit,
    CycleCatalog, CycleFamily,
};

use crate::cocycles;
use crate::error::StructureError;
use crate::shape::{quiver_shape, OneLoopCase, QuiverShape};

/// Class of a basis element (`H_I … H_VIII`) or of an algebra generator
/// (`c1 … c5`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    HI,
    HII,
    HIII,
    HIV,
    HV,
    HVI,
    HVII,
    HVIII,
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::HI => "H_I",
            ClassTag::HII => "H_II",
            ClassTag::HIII => "H_III",
            ClassTag::HIV => "H_IV",
            ClassTag::HV => "H_V",
            ClassTag::HVI => "H_VI",
            ClassTag::HVII => "H_VII",
            ClassTag::HVIII => "H_VIII",
            ClassTag::C1 => "c1",
            ClassTag::C2 => "c2",
            ClassTag::C3 => "c3",
            ClassTag::C4 => "c4",
            ClassTag::C5 => "c5",
        }
    }

    /// The basis class with the same shape as a generator class.
    pub fn basis_class(self) -> ClassTag {
        match self {
            ClassTag::C1 => ClassTag::HII,
            ClassTag::C2 => ClassTag::HIII,
            ClassTag::C3 => ClassTag::HIV,
            ClassTag::C4 => ClassTag::HVI,
            ClassTag::C5 => ClassTag::HVII,
            other => other,
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The defining combinatorial data of a basis element or generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    /// `𝟙`.
    Unit,
    /// `(s(α), α)` for a `ℬ`-maximal cycle `α`.
    Maximal { alpha: Path },
    /// `⟨⟨ρᵏ⟩⟩ₛ` for a cocomplete circuit `ρ`.
    CocompleteSum { circuit: Circuit, exponent: usize },
    /// `(c, c)`.
    Derivation { arrow: ArrowId },
    /// `(c, cρᵏ)` with `c` the first arrow of `ρ`.
    GluedCocomplete { circuit: Circuit, exponent: usize },
    /// `(γ, α)` for a `Γ`-maximal `γ`.
    MaximalPair { gamma: Path, alpha: Path },
    /// `⟨⟨ρᵏ⟩⟩_gr` for a complete circuit `ρ`.
    CompleteSum { circuit: Circuit, exponent: usize },
    /// `(bρᵏ, b)` with `b` the first arrow of `ρ`.
    GluedComplete { circuit: Circuit, exponent: usize },
}

impl Payload {
    /// The explicit cocycle.
    pub fn representative(&self, t: &SkewGentleTriple) -> Cochain {
        match self {
            Payload::Unit => cocycles::unit(t),
            Payload::Maximal { alpha } => cocycles::at_source(t, alpha),
            Payload::CocompleteSum { circuit, exponent } => {
                cocycles::cocomplete_sum(t, &circuit.power(*exponent))
            }
            Payload::Derivation { arrow } => cocycles::derivation(t, *arrow),
            Payload::GluedCocomplete { circuit, exponent } => {
                cocycles::glued_cocomplete(t, &circuit.power(*exponent))
            }
            Payload::MaximalPair { gamma, alpha } => cocycles::pair(t, gamma.clone(), alpha.clone()),
            Payload::CompleteSum { circuit, exponent } => {
                cocycles::complete_sum(t, &circuit.power(*exponent))
            }
            Payload::GluedComplete { circuit, exponent } => {
                cocycles::glued_complete(t, &circuit.power(*exponent))
            }
        }
    }

    /// External degree `n`.
    pub fn external_degree(&self) -> usize {
        match self {
            Payload::Unit
            | Payload::Maximal { .. }
            | Payload::CocompleteSum { .. } => 0,
            Payload::Derivation { .. } | Payload::GluedCocomplete { .. } => 1,
            Payload::MaximalPair { gamma, .. } => gamma.len(),
            Payload::CompleteSum { circuit, exponent } => circuit.period() * exponent,
            Payload::GluedComplete { circuit, exponent } => circuit.period() * exponent + 1,
        }
    }

    /// Internal degree `j`.
    pub fn internal_degree(&self, t: &SkewGentleTriple) -> i64 {
        let q = t.quiver();
        match self {
            Payload::Unit | Payload::Derivation { .. } => 0,
            Payload::Maximal { alpha } => alpha.degree(q),
            Payload::CocompleteSum { circuit, exponent }
            | Payload::GluedCocomplete { circuit, exponent } => {
                circuit.degree(t) * *exponent as i64
            }
            Payload::MaximalPair { gamma, alpha } => alpha.degree(q) - gamma.degree(q),
            Payload::CompleteSum { circuit, exponent }
            | Payload::GluedComplete { circuit, exponent } => {
                -(circuit.degree(t) * *exponent as i64)
            }
        }
    }

    /// Longest path occurring in the representative.
    pub fn max_path_length(&self) -> usize {
        match self {
            Payload::Unit => 0,
            Payload::Maximal { alpha } => alpha.len(),
            Payload::CocompleteSum { circuit, exponent } => circuit.period() * exponent,
            Payload::Derivation { .. } => 1,
            Payload::GluedCocomplete { circuit, exponent } => circuit.period() * exponent + 1,
            Payload::MaximalPair { gamma, alpha } => gamma.len().max(alpha.len()),
            Payload::CompleteSum { circuit, exponent } => circuit.period() * exponent,
            Payload::GluedComplete { circuit, exponent } => circuit.period() * exponent + 1,
        }
    }

    /// Human-readable form, e.g. `<<c.eps3.b.eps2.a>>_s` or `(c.b.a, e_1)`.
    pub fn describe(&self, t: &SkewGentleTriple) -> String {
        let q = t.quiver();
        let show = |p: &Path| t.show(p);
        match self {
            Payload::Unit => "1".to_string(),
            Payload::Maximal { alpha } => format!("(e_{}, {})", q.vertex_name(alpha.source()), show(alpha)),
            Payload::CocompleteSum { circuit, exponent } => {
                format!("<<{}>>_s", show(&circuit.power(*exponent)))
            }
            Payload::Derivation { arrow } => {
                let a = Path::arrow(q, *arrow);
                format!("({}, {})", show(&a), show(&a))
            }
            Payload::GluedCocomplete { circuit, exponent } => {
                let alpha = circuit.power(*exponent);
                let c = Path::arrow(q, alpha.first_arrow().expect("cycle"));
                format!("({}, {})", show(&c), show(&alpha.then(q, &c).expect("cycle")))
            }
            Payload::MaximalPair { gamma, alpha } => format!("({}, {})", show(gamma), show(alpha)),
            Payload::CompleteSum { circuit, exponent } => {
                format!("<<{}>>_gr", show(&circuit.power(*exponent)))
            }
            Payload::GluedComplete { circuit, exponent } => {
                let c = circuit.power(*exponent);
                let b = Path::arrow(q, c.first_arrow().expect("cycle"));
                format!("({}, {})", show(&c.then(q, &b).expect("cycle")), show(&b))
            }
        }
    }

    /// The circuit underlying a rotation sum or glued pair.
    pub fn circuit(&self) -> Option<(&Circuit, usize)> {
        match self {
            Payload::CocompleteSum { circuit, exponent }
            | Payload::GluedCocomplete { circuit, exponent }
            | Payload::CompleteSum { circuit, exponent }
            | Payload::GluedComplete { circuit, exponent } => Some((circuit, *exponent)),
            _ => None,
        }
    }
}

/// A tagged basis element or algebra generator with its representative
/// cocycle and bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTag {
    pub class: ClassTag,
    pub payload: Payload,
    /// External degree `n`.
    pub n: usize,
    /// Internal degree `j`.
    pub j: i64,
    /// Total degree `N = n + j`.
    pub total: i64,
    pub representative: Cochain,
}

impl GeneratorTag {
    pub fn new(t: &SkewGentleTriple, class: ClassTag, payload: Payload) -> Self {
        let n = payload.external_degree();
        let j = payload.internal_degree(t);
        GeneratorTag {
            class,
            n,
            j,
            total: n as i64 + j,
            representative: payload.representative(t),
            payload,
        }
    }

    /// `class: description`, e.g. `c4: (c.b.a, e_1)`.
    pub fn describe(&self, t: &SkewGentleTriple) -> String {
        format!("{}: {}", self.class, self.payload.describe(t))
    }
}

/// Cached combinatorial inventory used by the closed-form side.
#[derive(Clone, Debug)]
pub struct Inventory {
    pub shape: QuiverShape,
    pub catalog: CycleCatalog,
    pub b_maximal_cycles: Vec<Path>,
    pub gamma_maximal: Vec<Path>,
    /// `Q₁ ∖ (T ∪ Sp)`.
    pub derivation_arrows: Vec<ArrowId>,
}

impl Inventory {
    pub fn new(t: &SkewGentleTriple) -> Self {
        let maximal = maximal_elements(t);
        let tree = spanning_tree(t);
        Inventory {
            shape: quiver_shape(t),
            catalog: cycle_catalog(t),
            b_maximal_cycles: maximal.b_maximal_cycles,
            gamma_maximal: maximal.gamma_maximal,
            derivation_arrows: tree
                .complement
                .into_iter()
                .filter(|&a| !t.is_special(a))
                .collect(),
        }
    }

    /// Families of `C̄(Γ)` other than the special loops.
    pub fn complete_families<'a>(
        &'a self,
        t: &'a SkewGentleTriple,
    ) -> impl Iterator<Item = &'a CycleFamily> + 'a {
        self.catalog.closure_gamma_nonspecial(t)
    }
}

/// Exponent `k` of the family member of degree `target` (`k·d = target`,
/// `k ≥ 1` a multiple of the step), `Err(())` when every member has degree
/// `target` (degree-0 circuits with `target = 0`).
fn member_of_degree(f: &CycleFamily, d: i64, target: i64) -> Result<Option<usize>, ()> {
    if d == 0 {
        return if target == 0 { Err(()) } else { Ok(None) };
    }
    if target % d != 0 {
        return Ok(None);
    }
    let k = target / d;
    if k < 1 || (k as usize) % f.step != 0 {
        return Ok(None);
    }
    Ok(Some(k as usize))
}

/// The basis of `HH^{n,j}(A)` given by the classes `H_I … H_VIII`, with all
/// paths of length at most `max_len`.
///
/// Fails with [`StructureError::InfiniteFamily`] when a family of degree-0
/// circuits meets the block, and with [`StructureError::BeyondLengthBound`]
/// when the block has finitely many basis elements but some exceed the
/// bound.
pub fn closed_form_basis(
    t: &SkewGentleTriple,
    n: usize,
    j: i64,
    max_len: usize,
) -> Result<Vec<GeneratorTag>, StructureError> {
    closed_form_basis_with(t, &Inventory::new(t), n, j, max_len)
}

/// [`closed_form_basis`] with a precomputed inventory.
pub fn closed_form_basis_with(
    t: &SkewGentleTriple,
    inv: &Inventory,
    n: usize,
    j: i64,
    max_len: usize,
) -> Result<Vec<GeneratorTag>, StructureError> {
    let q = t.quiver();
    let mut out = Vec::new();
    let infinite = |class: ClassTag| StructureError::InfiniteFamily {
        class: class.name().into(),
        n,
        j,
    };
    let beyond = |class: ClassTag| StructureError::BeyondLengthBound {
        class: class.name().into(),
        n,
        j,
        max_len,
    };
    let mut push = |class: ClassTag, payload: Payload| -> Result<(), StructureError> {
        if payload.max_path_length() > max_len {
            return Err(beyond(class));
        }
        out.push(GeneratorTag::new(t, class, payload));
        Ok(())
    };

    if n == 0 {
        if j == 0 {
            push(ClassTag::HI, Payload::Unit)?;
        }
        for alpha in &inv.b_maximal_cycles {
            if alpha.degree(q) == j {
                push(ClassTag::HII, Payload::Maximal { alpha: alpha.clone() })?;
            }
        }
        // One vertex with a special loop ε: (s(ε), ε) spans the rest of HH⁰.
        if let QuiverShape::OneLoop {
            arrow,
            case: OneLoopCase::Special,
        } = inv.shape
        {
            if j == 0 {
                push(
                    ClassTag::HII,
                    Payload::Maximal {
                        alpha: Path::arrow(q, arrow),
                    },
                )?;
            }
        }
        for f in &inv.catalog.closure_b {
            match member_of_degree(f, f.circuit.degree(t), j) {
                Err(()) => return Err(infinite(ClassTag::HIII)),
                Ok(Some(k)) => push(
                    ClassTag::HIII,
                    Payload::CocompleteSum {
                        circuit: f.circuit.clone(),
                        exponent: k,
                    },
                )?,
                Ok(None) => {}
            }
        }
        return Ok(out);
    }

    if n == 1 {
        if j == 0 {
            for &c in &inv.derivation_arrows {
                push(ClassTag::HIV, Payload::Derivation { arrow: c })?;
            }
        }
        for f in &inv.catalog.closure_b {
            match member_of_degree(f, f.circuit.degree(t), j) {
                Err(()) => return Err(infinite(ClassTag::HV)),
                Ok(Some(k)) => push(
                    ClassTag::HV,
                    Payload::GluedCocomplete {
                        circuit: f.circuit.clone(),
                        exponent: k,
                    },
                )?,
                Ok(None) => {}
            }
        }
    }

    for gamma in inv.gamma_maximal.iter().filter(|g| g.len() == n) {
        let (s, e) = (gamma.source(), gamma.target(q));
        let deg = j + gamma.degree(q);
        if long_b_path_exists(t, s, e, deg, max_len) {
            return Err(beyond(ClassTag::HVI));
        }
        for alpha in b_paths_between(t, s, e, deg, max_len) {
            if alpha.first_arrow().is_some_and(|a| Some(a) == gamma.first_arrow())
                || alpha.last_arrow().is_some_and(|a| Some(a) == gamma.last_arrow())
            {
                continue;
            }
            push(
                ClassTag::HVI,
                Payload::MaximalPair {
                    gamma: gamma.clone(),
                    alpha,
                },
            )?;
        }
    }

    for f in inv.complete_families(t) {
        let r = f.circuit.period();
        // H_VII: C ∈ C̄ₙ(Γ); H_VIII: C ∈ C̄ₙ₋₁(Γ).
        for (class, len) in [(ClassTag::HVII, n), (ClassTag::HVIII, n - 1)] {
            if len == 0 || len % r != 0 {
                continue;
            }
            let k = len / r;
            if k % f.step != 0 || -(f.circuit.degree(t) * k as i64) != j {
                continue;
            }
            let circuit = f.circuit.clone();
            let payload = if class == ClassTag::HVII {
                Payload::CompleteSum { circuit, exponent: k }
            } else {
                Payload::GluedComplete { circuit, exponent: k }
            };
            push(class, payload)?;
        }
    }
    out.sort_by(|x, y| (x.class, &x.payload).cmp(&(y.class, &y.payload)));
    Ok(out)
}
