//! The `skewgentle` command line.

use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewgentle_complex::Variant;
use skewgentle_core::SkewGentleTriple;
use skewgentle_geometry::{correspondence_check, RibbonGraph};
use skewgentle_structure::{presentation, Bounds, CohomologyWindow, Inventory, StructureConstantTable, VerifyOptions};

use crate::document::load_presentation;
use crate::report::{
    build_report, dimension_blocks, dimension_grid, generator_lines, precompute, to_json, to_text, verdict_lines,
    DimensionEntry, ReportOptions, WindowSummary,
};

/// Exit code of a run that completed and found nothing wrong.
pub const EXIT_OK: u8 = 0;
/// The input could not be read, parsed or validated.
pub const EXIT_INVALID: u8 = 1;
/// A verification verdict failed.
pub const EXIT_VERIFICATION_FAILED: u8 = 2;
/// `--strict` and some block of the window is not certified.
pub const EXIT_UNSOUND: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "skewgentle",
    version,
    about = "Hochschild cohomology of graded skew-gentle algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Exit with status 3 when a block of the window is not certified by
    /// the length bound.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct WindowArgs {
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    /// Defaults to a window derived from the arrow degrees.
    #[arg(long, allow_negative_numbers = true)]
    pub j_min: Option<i64>,
    /// Defaults to a window derived from the arrow degrees.
    #[arg(long, allow_negative_numbers = true)]
    pub j_max: Option<i64>,
    #[arg(long, default_value_t = 12)]
    pub len_max: usize,
}

impl WindowArgs {
    pub fn bounds(&self, t: &SkewGentleTriple) -> Bounds {
        let auto = Bounds::auto(t, self.n_max, self.len_max);
        Bounds::new(
            self.n_max,
            self.j_min.unwrap_or(auto.j_min),
            self.j_max.unwrap_or(auto.j_max),
            self.len_max,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    D,
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a presentation.
    Validate { file: String },
    /// Dimensions of HH^(n,j) over a window.
    Hh {
        file: String,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, value_enum, default_value = "d")]
        variant: VariantArg,
    },
    /// The algebra generators with their bidegrees.
    Generators {
        file: String,
        #[arg(long, default_value_t = 12)]
        len_max: usize,
    },
    /// The relations among the generators.
    Relations {
        file: String,
        #[arg(long, default_value_t = 12)]
        len_max: usize,
    },
    /// Cup products of generators, reduced to closed-form classes.
    Products {
        file: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Gerstenhaber brackets of generators, reduced to closed-form classes.
    Bracket {
        file: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Ribbon graph, surface invariants and the generator correspondence.
    Geometry {
        file: String,
        #[arg(long, default_value_t = 12)]
        len_max: usize,
    },
    /// Runs the full verification suite.
    Check {
        file: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Everything, as JSON or text.
    Report {
        file: String,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

impl Command {
    fn file(&self) -> &str {
        match self {
            Command::Validate { file }
            | Command::Hh { file, .. }
            | Command::Generators { file, .. }
            | Command::Relations { file, .. }
            | Command::Products { file, .. }
            | Command::Bracket { file, .. }
            | Command::Geometry { file, .. }
            | Command::Check { file, .. }
            | Command::Report { file, .. } => file,
        }
    }
}

/// What a run printed and its exit status.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn strict_code(strict: bool, dims: &[DimensionEntry]) -> u8 {
    if strict && dims.iter().any(|d| !d.sound) {
        EXIT_UNSOUND
    } else {
        EXIT_OK
    }
}

/// Runs one command on presentation text (the file is read by the caller).
pub fn run_on_text(cli: &Cli, text: &str) -> Outcome {
    let mut o = Outcome::default();
    let t = match load_presentation(text) {
        Ok(t) => t,
        Err(e) => {
            o.code = EXIT_INVALID;
            let _ = writeln!(o.stderr, "{}: {e}", cli.command.file());
            return o;
        }
    };
    let out = &mut o.stdout;
    match &cli.command {
        Command::Validate { .. } => {
            let q = t.quiver();
            let _ = writeln!(
                out,
                "valid: {} vertices, {} arrows, {} relations, {} special loops, char {}",
                q.vertex_count(),
                q.arrow_count(),
                t.relations().len(),
                t.special_loops().len(),
                t.field().characteristic()
            );
        }
        Command::Hh { window, variant, .. } => {
            let bounds = window.bounds(&t);
            let variant = match variant {
                VariantArg::D => Variant::D,
                VariantArg::Delta => Variant::Delta,
            };
            let dims: Vec<DimensionEntry> = dimension_blocks(&t, bounds, variant)
                .iter()
                .map(|b| DimensionEntry {
                    n: b.n,
                    j: b.j,
                    dimension: b.dimension,
                    sound: b.certificate.is_sound(),
                })
                .collect();
            let _ = writeln!(out, "dimensions of HH^(n,j), variant {} (? = not certified)", variant.name());
            out.push_str(&dimension_grid(WindowSummary::from(bounds), &dims));
            o.code = strict_code(cli.strict, &dims);
        }
        Command::Generators { len_max, .. } => {
            let pres = presentation(&t, *len_max);
            let gens: Vec<_> = pres
                .generators
                .iter()
                .map(|g| crate::report::GeneratorEntry {
                    class: g.class.to_string(),
                    element: g.payload.describe(&t),
                    n: g.n,
                    j: g.j,
                    total: g.total,
                })
                .collect();
            out.push_str(&generator_lines(&gens));
        }
        Command::Relations { len_max, .. } => {
            let pres = presentation(&t, *len_max);
            let _ = writeln!(out, "{pres}");
            for r in &pres.relations {
                let _ = writeln!(out, "  {}", r.describe(&t, &pres.generators));
            }
        }
        Command::Products { window, .. } | Command::Bracket { window, .. } => {
            let bounds = window.bounds(&t);
            let w = CohomologyWindow::new(&t, bounds);
            let dims = precompute(&w);
            let pres = presentation(&t, bounds.max_len);
            let names: Vec<String> = pres.generators.iter().map(|g| g.describe(&t)).collect();
            let table = StructureConstantTable::new(&w, &Inventory::new(&t), pres.generators);
            let bracket = matches!(cli.command, Command::Bracket { .. });
            let entries = if bracket { &table.bracket } else { &table.cup };
            for (&(i, k), e) in entries {
                let value = crate::report::render_entry(e);
                let _ = if bracket {
                    writeln!(out, "[{}, {}] = {value}", names[i], names[k])
                } else {
                    writeln!(out, "{} ⌣ {} = {value}", names[i], names[k])
                };
            }
            o.code = strict_code(cli.strict, &dims);
        }
        Command::Geometry { len_max, .. } => match (RibbonGraph::build(&t), correspondence_check(&t, *len_max)) {
            (Ok(g), Ok(r)) => {
                out.push_str(&g.listing(&t));
                let s = &r.surface;
                let _ = writeln!(
                    out,
                    "(b, marks, G-punctures, G*-punctures, orbifold, genus) = {:?}",
                    s.summary()
                );
                let _ = writeln!(out, "euler characteristic {}, pi1 rank {}", s.euler_characteristic, s.pi1_rank);
                let _ = write!(out, "{r}");
                if !r.passed() {
                    o.code = EXIT_VERIFICATION_FAILED;
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                let _ = writeln!(o.stderr, "{e}");
                o.code = EXIT_VERIFICATION_FAILED;
            }
        },
        Command::Check { window, .. } | Command::Report { window, .. } => {
            let report = build_report(
                &t,
                ReportOptions {
                    bounds: window.bounds(&t),
                    verify: VerifyOptions::default(),
                },
            );
            match &cli.command {
                Command::Report { format: Format::Json, .. } => out.push_str(&to_json(&report)),
                Command::Report { format: Format::Text, .. } => out.push_str(&to_text(&report)),
                _ => out.push_str(&verdict_lines(&report.verdicts)),
            }
            o.code = if report.failed() {
                EXIT_VERIFICATION_FAILED
            } else {
                strict_code(cli.strict, &report.dimensions)
            };
        }
    }
    o
}

/// Reads the presentation file and runs the command.
pub fn run(cli: &Cli) -> Outcome {
    match std::fs::read_to_string(cli.command.file()) {
        Ok(text) => run_on_text(cli, &text),
        Err(e) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("{}: {e}\n", cli.command.file()),
        },
    }
}

/// Runs `f` on a thread pool capped by `SKEWGENTLE_THREADS` when set.
pub fn with_thread_limit<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let threads = std::env::var("SKEWGENTLE_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok());
    match threads.filter(|&n| n > 0) {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .unwrap_or_else(|e| panic!("cannot build a pool of {n} threads: {e}")),
        None => f(),
    }
}
