//! Presentation files, reports and the `skewgentle` command line.

pub mod cli;
pub mod document;
pub mod report;

pub use cli::{run, run_on_text, with_thread_limit, Cli, Command, Outcome};
pub use document::{load_presentation, parse_presentation, InputError, ParseError, PresentationDocument};
pub use report::{build_report, to_json, to_text, Report, ReportOptions, Status, Verdict};
