use std::process::ExitCode;

use clap::Parser;
use kbb_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let status = run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(status)
}
