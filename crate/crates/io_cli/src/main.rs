use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use skewgentle_cli::{run, with_thread_limit, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = with_thread_limit(|| run(&cli));
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
