//! Cross-checks of the closed-form side against the oracle inside a window:
//! basis counts, products, brackets, relations and the structure laws.

use skewgentle_complex::{apply_differential, Cochain, Variant};
use skewgentle_core::SkewGentleTriple;

use crate::basis::{closed_form_basis_with, GeneratorTag, Inventory, Payload};
use crate::circ::bracket;
use crate::cup::cup;
use crate::error::{StructureError, StructuredMismatch};
use crate::exceptional::{kronecker_bracket_listed, kronecker_generators};
use crate::generators::presentation;
use crate::shape::QuiverShape;
use crate::circ::circ;
use crate::table::{derivation_action, expected_bracket, expected_circ, expected_cup};
use crate::window::{Bounds, CohomologyWindow};

/// Outcome counts of one named check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub name: String,
    pub passed: usize,
    /// Instances outside the window, on uncertified blocks, or without a
    /// closed-form expectation.
    pub skipped: usize,
    pub failures: Vec<StructuredMismatch>,
}

impl CheckTally {
    fn new(name: &str) -> Self {
        CheckTally {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records the outcome of one instance: `Ok(None)` passes, `Ok(Some)`
    /// fails, window-limit errors skip, other errors fail.
    fn record(&mut self, outcome: Result<Option<StructuredMismatch>, StructureError>, operands: &[String]) {
        match outcome {
            Ok(None) => self.passed += 1,
            Ok(Some(m)) => self.failures.push(m),
            Err(e) if e.is_window_limit() => self.skipped += 1,
            Err(e) => self.failures.push(StructuredMismatch {
                check: self.name.clone(),
                operands: operands.to_vec(),
                computed: String::new(),
                expected: String::new(),
                witness: e.to_string(),
            }),
        }
    }
}

/// Per-check results of [`verify_structure`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckTally>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckTally::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &StructuredMismatch> {
        self.checks.iter().flat_map(|c| c.failures.iter())
    }
}

/// Options of [`verify_structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// At most this many ordered generator triples enter the associativity,
    /// Jacobi and Leibniz checks (taken in lexicographic order).
    pub triple_budget: usize,
    /// The same checks on ordered triples of closed-form basis classes of
    /// the window, smallest index sums first.
    pub basis_triple_budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            triple_budget: usize::MAX,
            basis_triple_budget: 2000,
        }
    }
}

/// Names of the checks, in report order.
pub const CHECKS: [&str; 13] = [
    "cocycles",
    "basis",
    "cup-table",
    "cup-cocycle",
    "commutativity",
    "associativity",
    "relations",
    "antisymmetry",
    "bracket-cocycle",
    "circ-table",
    "bracket-theorem",
    "jacobi",
    "leibniz",
];

struct Ctx<'a> {
    t: &'a SkewGentleTriple,
    window: &'a CohomologyWindow,
}

impl Ctx<'_> {
    fn show(&self, z: &Cochain) -> String {
        z.display(self.t)
    }

    /// `Ok(None)` when `z` and `w` are cohomologous cocycles of `(n, j)`.
    fn compare(
        &self,
        check: &str,
        operands: &[String],
        n: usize,
        j: i64,
        z: &Cochain,
        w: &Cochain,
    ) -> Result<Option<StructuredMismatch>, StructureError> {
        let diff = z.sub(w);
        if diff.is_zero() {
            return Ok(None);
        }
        let block = self.window.block(n, j)?;
        let coords = block.coboundary_coordinates(self.t, &diff)?;
        if coords.is_zero_class() {
            return Ok(None);
        }
        Ok(Some(StructuredMismatch {
            check: check.into(),
            operands: operands.to_vec(),
            computed: self.show(z),
            expected: self.show(w),
            witness: format!(
                "difference has class coordinates [{}]",
                coords
                    .coefficients
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }))
    }

    /// `Ok(None)` when `z` is exactly zero.
    fn exact_zero(&self, check: &str, operands: &[String], z: &Cochain) -> Option<StructuredMismatch> {
        (!z.is_zero()).then(|| StructuredMismatch {
            check: check.into(),
            operands: operands.to_vec(),
            computed: self.show(z),
            expected: "0".into(),
            witness: "cochain-level identity".into(),
        })
    }

    fn cocycle(&self, check: &str, operands: &[String], z: &Cochain) -> Option<StructuredMismatch> {
        let dz = apply_differential(self.t, Variant::D, z);
        (!dz.is_zero()).then(|| StructuredMismatch {
            check: check.into(),
            operands: operands.to_vec(),
            computed: self.show(z),
            expected: "a cocycle".into(),
            witness: format!("d = {}", self.show(&dz)),
        })
    }
}

/// Runs every check on the generators and closed-form basis elements of
/// the window.  Products and brackets are compared as classes, by solving
/// modulo coboundaries in the oracle's blocks; blocks outside the window or
/// not certified by the length bound are skipped and counted.
pub fn verify_structure(window: &CohomologyWindow, opts: VerifyOptions) -> VerificationReport {
    let t = window.triple();
    let bounds = window.bounds();
    let inv = Inventory::new(t);
    let ctx = Ctx { t, window };
    let pres = presentation(t, bounds.max_len);
    let gens = &pres.generators;
    let mut tallies: Vec<CheckTally> = CHECKS.iter().map(|n| CheckTally::new(n)).collect();
    let idx = |name: &str| CHECKS.iter().position(|c| *c == name).expect("known check");

    // Closed-form basis of every block of the window.
    let mut basis: Vec<GeneratorTag> = Vec::new();
    for (n, j) in bounds.blocks() {
        let operands = [format!("HH^({n},{j})")];
        let outcome = window.class_basis(&inv, n, j).map(|b| {
            basis.extend(b.elements);
            None
        });
        tallies[idx("basis")].record(outcome, &operands);
    }

    for g in gens.iter().chain(basis.iter()) {
        let operands = [g.describe(t)];
        let m = ctx.cocycle("cocycles", &operands, &g.representative);
        tallies[idx("cocycles")].record(Ok(m), &operands);
    }

    // Cup products of basis classes against the tables.
    for x in &basis {
        for y in &basis {
            let operands = [x.describe(t), y.describe(t)];
            let outcome = expected_cup(t, &inv, x, y).and_then(|expected| {
                let z = cup(t, &x.representative, &y.representative);
                ctx.compare("cup-table", &operands, x.n + y.n, x.j + y.j, &z, &expected)
            });
            tallies[idx("cup-table")].record(outcome, &operands);
        }
    }

    // Closure and antisymmetry on every pair of basis classes.
    for x in &basis {
        for y in &basis {
            let operands = [x.describe(t), y.describe(t)];
            let z = cup(t, &x.representative, &y.representative);
            let m = ctx.cocycle("cup-cocycle", &operands, &z);
            tallies[idx("cup-cocycle")].record(Ok(m), &operands);
            let b = bracket(t, &x.representative, &y.representative);
            let m = ctx.cocycle("bracket-cocycle", &operands, &b);
            tallies[idx("bracket-cocycle")].record(Ok(m), &operands);
            let mirrored = bracket(t, &y.representative, &x.representative)
                .scale(&t.field().sign((x.total - 1) * (y.total - 1)));
            let m = ctx.exact_zero("antisymmetry", &operands, &b.add(&mirrored));
            tallies[idx("antisymmetry")].record(Ok(m), &operands);
        }
    }

    let names: Vec<String> = gens.iter().map(|g| g.describe(t)).collect();
    let cups: Vec<Vec<Cochain>> = gens
        .iter()
        .map(|u| gens.iter().map(|v| cup(t, &u.representative, &v.representative)).collect())
        .collect();
    let brackets: Vec<Vec<Cochain>> = gens
        .iter()
        .map(|u| gens.iter().map(|v| bracket(t, &u.representative, &v.representative)).collect())
        .collect();

    for (a, u) in gens.iter().enumerate() {
        for (b, v) in gens.iter().enumerate() {
            let operands = [names[a].clone(), names[b].clone()];
            let (n, j) = (u.n + v.n, u.j + v.j);
            let m = ctx.cocycle("cup-cocycle", &operands, &cups[a][b]);
            tallies[idx("cup-cocycle")].record(Ok(m), &operands);

            let swapped = cups[b][a].scale(&t.field().sign(u.total * v.total));
            let outcome = ctx.compare("commutativity", &operands, n, j, &cups[a][b], &swapped);
            tallies[idx("commutativity")].record(outcome, &operands);

            let mirrored = brackets[b][a].scale(&t.field().sign((u.total - 1) * (v.total - 1)));
            let m = ctx.exact_zero("antisymmetry", &operands, &brackets[a][b].add(&mirrored));
            tallies[idx("antisymmetry")].record(Ok(m), &operands);

            let m = ctx.cocycle("bracket-cocycle", &operands, &brackets[a][b]);
            tallies[idx("bracket-cocycle")].record(Ok(m), &operands);
        }
    }

    for rel in &pres.relations {
        let operands = [rel.describe(t, gens)];
        let z = rel.element(t, gens);
        let outcome = if z.is_zero() {
            Ok(None)
        } else {
            let ids = rel.generators();
            let (n, j) = match ids.as_slice() {
                [g] => (2 * gens[*g].n, 2 * gens[*g].j),
                [l, r] => (gens[*l].n + gens[*r].n, gens[*l].j + gens[*r].j),
                [c, _, x] => (gens[*c].n + gens[*x].n, gens[*c].j + gens[*x].j),
                _ => unreachable!("relations have one to three generators"),
            };
            ctx.compare("relations", &operands, n, j, &z, &Cochain::zero(t.field(), n))
        };
        tallies[idx("relations")].record(outcome, &operands);
    }

    // The composition table of generators (general quivers only).
    if inv.shape == QuiverShape::General {
        for (a, u) in gens.iter().enumerate() {
            for (b, v) in gens.iter().enumerate() {
                let operands = [names[a].clone(), names[b].clone()];
                let Some(expected) = expected_circ(t, u, v) else {
                    tallies[idx("circ-table")].skipped += 1;
                    continue;
                };
                let z = circ(t, &u.representative, &v.representative);
                let diff = z.sub(&expected);
                let outcome = if diff.is_zero() {
                    Ok(None)
                } else if let Some(m) = ctx.cocycle("circ-table", &operands, &diff) {
                    Ok(Some(m))
                } else {
                    let n = (u.n + v.n).saturating_sub(1);
                    ctx.compare("circ-table", &operands, n, u.j + v.j, &z, &expected)
                };
                tallies[idx("circ-table")].record(outcome, &operands);
            }
        }
    }

    bracket_theorem(&ctx, &inv, gens, &basis, &brackets, &mut tallies, idx("bracket-theorem"));

    let laws = [idx("associativity"), idx("jacobi"), idx("leibniz")];
    triple_laws(&ctx, gens, opts.triple_budget, &mut tallies, laws);
    triple_laws(&ctx, &basis, opts.basis_triple_budget, &mut tallies, laws);

    VerificationReport { checks: tallies }
}

/// Associativity (exact), Jacobi and Leibniz (up to coboundary) on ordered
/// triples of `elems`, at most `budget` of them, smallest index sums first.
fn triple_laws(ctx: &Ctx<'_>, elems: &[GeneratorTag], budget: usize, tallies: &mut [CheckTally], laws: [usize; 3]) {
    let t = ctx.t;
    let f = t.field();
    let k = elems.len();
    let names: Vec<String> = elems.iter().map(|g| g.describe(t)).collect();
    let reps: Vec<&Cochain> = elems.iter().map(|g| &g.representative).collect();
    let cups: Vec<Vec<Cochain>> = reps.iter().map(|u| reps.iter().map(|v| cup(t, u, v)).collect()).collect();
    let brackets: Vec<Vec<Cochain>> = reps
        .iter()
        .map(|u| reps.iter().map(|v| bracket(t, u, v)).collect())
        .collect();
    let mut triples: Vec<(usize, usize, usize)> = (0..k)
        .flat_map(|a| (0..k).flat_map(move |b| (0..k).map(move |c| (a, b, c))))
        .collect();
    triples.sort_by_key(|&(a, b, c)| (a + b + c, a, b, c));
    for (a, b, c) in triples.into_iter().take(budget) {
        let (u, v, w) = (&elems[a], &elems[b], &elems[c]);
        let operands = [names[a].clone(), names[b].clone(), names[c].clone()];
        let (ru, rv, rw) = (reps[a], reps[b], reps[c]);

        let left = cup(t, &cups[a][b], rw);
        let right = cup(t, ru, &cups[b][c]);
        let m = ctx.exact_zero("associativity", &operands, &left.sub(&right));
        tallies[laws[0]].record(Ok(m), &operands);

        let (nu, nv, nw) = (u.total - 1, v.total - 1, w.total - 1);
        let ext = u.n + v.n + w.n;
        let j = u.j + v.j + w.j;
        let jac = bracket(t, ru, &brackets[b][c])
            .scale(&f.sign(nu * nw))
            .add(&bracket(t, rv, &brackets[c][a]).scale(&f.sign(nv * nu)))
            .add(&bracket(t, rw, &brackets[a][b]).scale(&f.sign(nw * nv)));
        let outcome = if ext < 2 {
            Ok(ctx.exact_zero("jacobi", &operands, &jac))
        } else {
            ctx.compare("jacobi", &operands, ext - 2, j, &jac, &Cochain::zero(f, ext - 2))
        };
        tallies[laws[1]].record(outcome, &operands);

        // [u, v⌣w] = [u,v]⌣w + (−1)^{(N_u−1)N_v} v⌣[u,w]
        let lhs = bracket(t, ru, &cups[b][c]);
        let rhs = cup(t, &brackets[a][b], rw).add(&cup(t, rv, &brackets[a][c]).scale(&f.sign(nu * v.total)));
        let outcome = if ext == 0 {
            Ok(ctx.exact_zero("leibniz", &operands, &lhs.sub(&rhs)))
        } else {
            ctx.compare("leibniz", &operands, ext - 1, j, &lhs, &rhs)
        };
        tallies[laws[2]].record(outcome, &operands);
    }
}

#[allow(clippy::too_many_arguments)]
fn bracket_theorem(
    ctx: &Ctx<'_>,
    inv: &Inventory,
    gens: &[GeneratorTag],
    basis: &[GeneratorTag],
    brackets: &[Vec<Cochain>],
    tallies: &mut [CheckTally],
    theorem: usize,
) {
    let t = ctx.t;
    let f = t.field();
    if let QuiverShape::Kronecker { a, b } = inv.shape {
        let listed = kronecker_generators(t, a, b);
        for (x, (nx, gx)) in listed.iter().enumerate() {
            for (y, (ny, gy)) in listed.iter().enumerate() {
                let operands = [nx.clone(), ny.clone()];
                let z = bracket(t, gx, gy);
                let mirror = f.sign(1 + (total(t, gx) - 1) * (total(t, gy) - 1));
                let expected = match (
                    kronecker_bracket_listed(t, a, b, x, y),
                    kronecker_bracket_listed(t, a, b, y, x),
                ) {
                    (Some((c, k)), _) => listed[k].1.scale(&f.from_int(c)),
                    (None, Some((c, k))) => listed[k].1.scale(&(&f.from_int(c) * &mirror)),
                    (None, None) => Cochain::zero(f, 1),
                };
                let outcome = ctx.compare("bracket-theorem", &operands, 1, 0, &z, &expected);
                tallies[theorem].record(outcome, &operands);
            }
        }
        derivation_action_on_basis(ctx, gens, basis, tallies, theorem);
        return;
    }
    for (a, u) in gens.iter().enumerate() {
        for (b, v) in gens.iter().enumerate() {
            let operands = [u.describe(t), v.describe(t)];
            let outcome = expected_bracket(t, inv, u, v).and_then(|expected| {
                let n = (u.n + v.n).saturating_sub(1);
                if u.n + v.n == 0 {
                    Ok(ctx.exact_zero("bracket-theorem", &operands, &brackets[a][b].sub(&expected)))
                } else {
                    ctx.compare("bracket-theorem", &operands, n, u.j + v.j, &brackets[a][b], &expected)
                }
            });
            tallies[theorem].record(outcome, &operands);
        }
    }
    derivation_action_on_basis(ctx, gens, basis, tallies, theorem);
}

/// `[(c,c), v] = deg_c(v)·v` on every basis element.  Checked on every quiver with a
/// derivation generator (on one loop and the Kronecker quiver it is a
/// consequence of the listed brackets).
fn derivation_action_on_basis(
    ctx: &Ctx<'_>,
    gens: &[GeneratorTag],
    basis: &[GeneratorTag],
    tallies: &mut [CheckTally],
    theorem: usize,
) {
    let t = ctx.t;
    for c in gens.iter().filter_map(|g| match g.payload {
        Payload::Derivation { arrow } => Some((g, arrow)),
        _ => None,
    }) {
        let (g, arrow) = c;
        for v in basis {
            let operands = [g.describe(t), v.describe(t)];
            let z = bracket(t, &g.representative, &v.representative);
            let expected = derivation_action(t, arrow, v);
            let outcome = ctx.compare("bracket-theorem", &operands, v.n, v.j, &z, &expected);
            tallies[theorem].record(outcome, &operands);
        }
    }
}

fn total(t: &SkewGentleTriple, z: &Cochain) -> i64 {
    z.degree() as i64 + z.internal_degree(t.quiver()).unwrap_or(0)
}

/// Compares the closed-form basis count with the oracle dimension on every
/// certified block of the window; returns `(n, j, closed form, oracle)` for
/// each compared block.
pub fn basis_counts(window: &CohomologyWindow) -> Vec<Result<(usize, i64, usize, usize), StructureError>> {
    let t = window.triple();
    let inv = Inventory::new(t);
    let bounds: Bounds = window.bounds();
    bounds
        .blocks()
        .map(|(n, j)| {
            let block = window.block(n, j)?;
            let basis = closed_form_basis_with(t, &inv, n, j, bounds.max_len)?;
            Ok((n, j, basis.len(), block.dimension))
        })
        .collect()
}
