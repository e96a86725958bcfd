use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = vug_cli::Cli::parse();
    ExitCode::from(vug_cli::run(&cli))
}
