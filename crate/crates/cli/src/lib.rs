//! Library surface of the `vug` command-line tool, exposed so integration
//! tests can drive commands directly.

pub mod args;
pub mod commands;
pub mod report;

use std::path::Path;

pub use args::{Cli, Command};
pub use commands::Output;

use vug_core::{Error, Result};

/// Dispatch a parsed command line. Returns the process exit code.
pub fn run(cli: &Cli) -> u8 {
    let result = match &cli.command {
        Command::AnalyzeGraph(a) => commands::run_analyze(a).map(|o| (o, a.out.clone())),
        Command::WorstCase(a) => commands::run_worst_case(a).map(|o| (o, a.out.clone())),
        Command::Equilibria(a) => commands::run_equilibria(a).map(|o| (o, a.out.clone())),
        Command::Verify(a) => commands::run_verify(a).map(|o| (o, a.out.clone())),
        Command::Sweep(a) => commands::run_sweep(a).map(|o| (o, a.out.clone())),
    };
    match result {
        Ok((output, out_path)) => {
            if let Err(e) = deliver(&output.report, out_path.as_deref()) {
                eprintln!("error: {e}");
                return 2;
            }
            if output.violation {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn deliver(report: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, report)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{report}"),
    }
    Ok(())
}

/// 0 success, 1 bound violation, 2 input error, 3 size-cap error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::SizeLimit { .. } => 3,
        _ => 2,
    }
}
