//! The full computation for one presentation and its serialization:
//! dimension table, generators, relations, structure constants, geometry
//! and verification verdicts.

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;
use skewgentle_complex::{check_square_zero, cohomology, gentle_companion_window, CohomologyBlock, Variant};
use skewgentle_core::SkewGentleTriple;
use skewgentle_geometry::{correspondence_check, RibbonGraph};
use skewgentle_structure::{
    basis_counts, presentation, verify_structure, Bounds, CheckTally, CohomologyWindow, Entry,
    Inventory, StructureConstantTable, VerifyOptions,
};

use crate::document::PresentationDocument;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    fn new(name: &str, status: Status, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WindowSummary {
    pub n_max: usize,
    pub j_min: i64,
    pub j_max: i64,
    pub len_max: usize,
}

impl From<Bounds> for WindowSummary {
    fn from(b: Bounds) -> Self {
        WindowSummary {
            n_max: b.n_max,
            j_min: b.j_min,
            j_max: b.j_max,
            len_max: b.max_len,
        }
    }
}

/// One block of the dimension table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionEntry {
    pub n: usize,
    pub j: i64,
    pub dimension: usize,
    /// Whether the length bound certifies the block.
    pub sound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorEntry {
    pub class: String,
    pub element: String,
    pub n: usize,
    pub j: i64,
    pub total: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeometrySummary {
    pub ribbon_graph: Vec<String>,
    pub boundary_components: usize,
    pub marked_points: usize,
    pub g_punctures: usize,
    pub g_star_punctures: usize,
    pub orbifold_points: usize,
    pub genus: usize,
    pub euler_characteristic: i64,
    pub pi1_rank: usize,
    pub pi1_rank_all_arrows: usize,
    pub pairings: Vec<String>,
    pub discrepancies: Vec<String>,
}

/// Everything computed for one presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub presentation: PresentationDocument,
    pub window: WindowSummary,
    pub dimensions: Vec<DimensionEntry>,
    pub generators: Vec<GeneratorEntry>,
    pub relations: Vec<String>,
    pub cup: Vec<TableEntry>,
    pub bracket: Vec<TableEntry>,
    pub geometry: Option<GeometrySummary>,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == Status::Fail)
    }

    /// True when some block of the window is not certified by the length
    /// bound.
    pub fn has_unsound_blocks(&self) -> bool {
        self.dimensions.iter().any(|d| !d.sound)
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }
}

/// Computes every block of the window in parallel (variant `d`) and
/// stores it, returning the blocks ordered by `(n, j)`.
pub fn precompute(window: &CohomologyWindow) -> Vec<DimensionEntry> {
    let blocks = dimension_blocks(window.triple(), window.bounds(), Variant::D);
    blocks
        .into_iter()
        .map(|b| {
            let entry = DimensionEntry {
                n: b.n,
                j: b.j,
                dimension: b.dimension,
                sound: b.certificate.is_sound(),
            };
            window.insert(b);
            entry
        })
        .collect()
}

/// The blocks of a window for either variant, computed in parallel.
pub fn dimension_blocks(t: &SkewGentleTriple, bounds: Bounds, variant: Variant) -> Vec<CohomologyBlock> {
    let keys: Vec<(usize, i64)> = bounds.blocks().collect();
    keys.par_iter()
        .map(|&(n, j)| cohomology(t, n, j, variant, bounds.max_len))
        .collect()
}

/// `d∘d = 0` and `δ∘δ = 0` on every pair of every block of the window.
fn square_zero_verdict(t: &SkewGentleTriple, bounds: Bounds) -> Verdict {
    let keys: Vec<(usize, i64)> = bounds.blocks().collect();
    let failures: Vec<String> = keys
        .par_iter()
        .flat_map_iter(|&(n, j)| {
            let pairs = skewgentle_complex::block_pairs(t, n, j, bounds.max_len).pairs;
            [Variant::D, Variant::Delta].into_iter().filter_map(move |v| {
                check_square_zero(t, v, &pairs)
                    .err()
                    .map(|(p, dd)| format!("{} at ({n},{j}) on {}: {}", v.name(), p.display(t), dd.display(t)))
            })
        })
        .collect();
    match failures.first() {
        Some(first) => Verdict::new("square-zero", Status::Fail, first.clone()),
        None => Verdict::new("square-zero", Status::Pass, format!("{} blocks, both variants", keys.len())),
    }
}

fn basis_verdict(window: &CohomologyWindow) -> Verdict {
    let name = "oracle-vs-closed-form";
    let (mut compared, mut skipped) = (0, 0);
    for r in basis_counts(window) {
        match r {
            Ok((n, j, closed, oracle)) if closed != oracle => {
                return Verdict::new(name, Status::Fail, format!("({n},{j}): closed form {closed}, oracle {oracle}"))
            }
            Ok(_) => compared += 1,
            Err(e) if e.is_window_limit() => skipped += 1,
            Err(e) => return Verdict::new(name, Status::Fail, e.to_string()),
        }
    }
    tally_status(name, compared, skipped, "blocks")
}

fn companion_verdict(t: &SkewGentleTriple, b: Bounds) -> Verdict {
    let name = "gentle-companion";
    match gentle_companion_window(t, b.n_max, b.j_min, b.j_max, b.max_len) {
        Ok(rows) => {
            let certified = rows.iter().filter(|r| r.certified).count();
            tally_status(name, certified, rows.len() - certified, "blocks")
        }
        Err(e) => Verdict::new(name, Status::Fail, e.to_string()),
    }
}

fn tally_status(name: &str, passed: usize, skipped: usize, unit: &str) -> Verdict {
    let detail = format!("{passed} {unit} checked, {skipped} skipped");
    if passed == 0 {
        Verdict::new(name, Status::Skipped, detail)
    } else {
        Verdict::new(name, Status::Pass, detail)
    }
}

fn check_verdict(c: &CheckTally) -> Verdict {
    match c.failures.first() {
        Some(m) => Verdict::new(
            &c.name,
            Status::Fail,
            format!(
                "{} failure(s); first: [{}] computed {} expected {} ({})",
                c.failures.len(),
                m.operands.join(", "),
                m.computed,
                m.expected,
                m.witness
            ),
        ),
        None => tally_status(&c.name, c.passed, c.skipped, "instances"),
    }
}

pub fn render_entry(e: &Entry) -> String {
    match e {
        Entry::Zero => "0".into(),
        Entry::Class { terms, .. } => terms
            .iter()
            .map(|(name, c)| if c.is_one() { name.clone() } else { format!("{c}·({name})") })
            .collect::<Vec<_>>()
            .join(" + "),
        Entry::Skipped(reason) => format!("skipped: {reason}"),
    }
}

fn table_entries(names: &[String], table: &BTreeMap<(usize, usize), Entry>) -> Vec<TableEntry> {
    table
        .iter()
        .map(|(&(i, k), e)| TableEntry {
            left: names[i].clone(),
            right: names[k].clone(),
            value: render_entry(e),
        })
        .collect()
}

/// Options of [`build_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub bounds: Bounds,
    pub verify: VerifyOptions,
}

/// Runs the whole pipeline.
pub fn build_report(t: &SkewGentleTriple, opts: ReportOptions) -> Report {
    let bounds = opts.bounds;
    let window = CohomologyWindow::new(t, bounds);
    let dimensions = precompute(&window);
    let inv = Inventory::new(t);
    let pres = presentation(t, bounds.max_len);
    let names: Vec<String> = pres.generators.iter().map(|g| g.describe(t)).collect();
    let generators = pres
        .generators
        .iter()
        .map(|g| GeneratorEntry {
            class: g.class.to_string(),
            element: g.payload.describe(t),
            n: g.n,
            j: g.j,
            total: g.total,
        })
        .collect();
    let relations = pres
        .relations
        .iter()
        .map(|r| format!("{}: {}", r.label(&pres.generators), r.describe(t, &pres.generators)))
        .collect();

    let (geometry, correspondence) = match correspondence_check(t, bounds.max_len) {
        Ok(r) => {
            let s = &r.surface;
            let summary = GeometrySummary {
                ribbon_graph: RibbonGraph::build(t)
                    .map(|g| g.listing(t).lines().map(String::from).collect())
                    .unwrap_or_default(),
                boundary_components: s.boundary_components,
                marked_points: s.marked_points,
                g_punctures: s.g_punctures,
                g_star_punctures: s.g_star_punctures,
                orbifold_points: s.orbifold_points,
                genus: s.genus,
                euler_characteristic: s.euler_characteristic,
                pi1_rank: s.pi1_rank,
                pi1_rank_all_arrows: s.pi1_rank_all_arrows,
                pairings: r
                    .pairings
                    .iter()
                    .map(|p| format!("{} <-> {} (w = {}, total {})", p.feature, p.generator, p.winding, p.total))
                    .collect(),
                discrepancies: r.discrepancies.iter().map(|d| format!("{}: {}", d.feature, d.detail)).collect(),
            };
            let (b, g, gs, pi) = r.counts();
            let detail = format!("boundary:{b}, G-punct:{g}, G*-punct:{gs}, pi1:{pi}");
            let verdict = if r.passed() {
                Verdict::new("correspondence", Status::Pass, detail)
            } else {
                Verdict::new("correspondence", Status::Fail, format!("{} discrepancies; {detail}", r.discrepancies.len()))
            };
            (Some(summary), verdict)
        }
        Err(e) => (None, Verdict::new("correspondence", Status::Fail, e.to_string())),
    };

    let empty = dimensions.is_empty();
    let (verdicts, cup, bracket) = if empty {
        let v: Vec<Verdict> = ["square-zero", "oracle-vs-closed-form", "gentle-companion"]
            .into_iter()
            .chain(skewgentle_structure::CHECKS)
            .chain(["correspondence"])
            .map(|n| Verdict::new(n, Status::Skipped, "empty window"))
            .collect();
        (v, Vec::new(), Vec::new())
    } else {
        let ((square, companion), (checks, table)) = rayon::join(
            || rayon::join(|| square_zero_verdict(t, bounds), || companion_verdict(t, bounds)),
            || {
                rayon::join(
                    || verify_structure(&window, opts.verify),
                    || StructureConstantTable::new(&window, &inv, pres.generators.clone()),
                )
            },
        );
        let mut v = vec![square, basis_verdict(&window), companion];
        v.extend(checks.checks.iter().map(check_verdict));
        v.push(correspondence);
        (v, table_entries(&names, &table.cup), table_entries(&names, &table.bracket))
    };

    Report {
        presentation: PresentationDocument::from_triple(t),
        window: bounds.into(),
        dimensions,
        generators,
        relations,
        cup,
        bracket,
        geometry,
        verdicts,
    }
}

/// Stable JSON: keys sorted, arrays in computation order.
pub fn to_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

/// The dimension table as a grid over `(n, j)`; uncertified blocks carry
/// a `?`.
pub fn dimension_grid(window: WindowSummary, dims: &[DimensionEntry]) -> String {
    let mut out = String::new();
    let cell = |n: usize, j: i64| {
        dims.iter()
            .find(|d| d.n == n && d.j == j)
            .map(|d| format!("{}{}", d.dimension, if d.sound { "" } else { "?" }))
            .unwrap_or_default()
    };
    let _ = write!(out, "{:>5}", "n\\j");
    for j in window.j_min..=window.j_max {
        let _ = write!(out, "{j:>5}");
    }
    out.push('\n');
    for n in 0..=window.n_max {
        let _ = write!(out, "{n:>5}");
        for j in window.j_min..=window.j_max {
            let _ = write!(out, "{:>5}", cell(n, j));
        }
        out.push('\n');
    }
    out
}

/// Generators grouped by class, one line each.
pub fn generator_lines(gens: &[GeneratorEntry]) -> String {
    let mut by_class: BTreeMap<&str, Vec<&GeneratorEntry>> = BTreeMap::new();
    for g in gens {
        by_class.entry(&g.class).or_default().push(g);
    }
    let mut out = String::new();
    for (class, gs) in by_class {
        let _ = writeln!(out, "  {class}:");
        for g in gs {
            let _ = writeln!(out, "    {}  (n, j) = ({}, {}), total {}", g.element, g.n, g.j, g.total);
        }
    }
    out
}

/// The human-readable report.
pub fn to_text(r: &Report) -> String {
    let p = &r.presentation;
    let w = r.window;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "presentation: {} vertices, {} arrows, {} relations, {} special loops, char {}",
        p.vertices.len(),
        p.arrows.len(),
        p.relations.len(),
        p.special.len(),
        p.field.characteristic
    );
    let _ = writeln!(
        out,
        "window: n <= {}, {} <= j <= {}, paths of length <= {}",
        w.n_max, w.j_min, w.j_max, w.len_max
    );
    let _ = writeln!(out, "\ndimensions of HH^(n,j) (? = not certified by the length bound)");
    out.push_str(&dimension_grid(w, &r.dimensions));
    let _ = writeln!(out, "\ngenerators");
    out.push_str(&generator_lines(&r.generators));
    let _ = writeln!(out, "\nrelations");
    for rel in &r.relations {
        let _ = writeln!(out, "  {rel}");
    }
    for (title, op, table) in [("cup products", "⌣", &r.cup), ("brackets", ",", &r.bracket)] {
        let _ = writeln!(out, "\n{title} (nonzero entries)");
        for e in table.iter().filter(|e| e.value != "0") {
            let _ = if op == "⌣" {
                writeln!(out, "  {} ⌣ {} = {}", e.left, e.right, e.value)
            } else {
                writeln!(out, "  [{}, {}] = {}", e.left, e.right, e.value)
            };
        }
    }
    let _ = writeln!(out, "\ngeometry");
    match &r.geometry {
        Some(g) => {
            for line in &g.ribbon_graph {
                let _ = writeln!(out, "  {line}");
            }
            let _ = writeln!(
                out,
                "  boundary components {}, marked points {}, G-punctures {}, G*-punctures {}, orbifold points {}, genus {}",
                g.boundary_components, g.marked_points, g.g_punctures, g.g_star_punctures, g.orbifold_points, g.genus
            );
            let _ = writeln!(
                out,
                "  euler characteristic {}, pi1 rank {} ({} counting special loops)",
                g.euler_characteristic, g.pi1_rank, g.pi1_rank_all_arrows
            );
            for line in g.pairings.iter().chain(&g.discrepancies) {
                let _ = writeln!(out, "  {line}");
            }
        }
        None => {
            let _ = writeln!(out, "  unavailable");
        }
    }
    let _ = writeln!(out, "\nverdicts");
    out.push_str(&verdict_lines(&r.verdicts));
    out
}

pub fn verdict_lines(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let status = match v.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        };
        let _ = writeln!(out, "  {status:<7} {}: {}", v.name, v.detail);
    }
    out
}
