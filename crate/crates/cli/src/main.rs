use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use inverse_hom_cli::{execute, Cli};

fn main() -> ExitCode {
    let out = execute(Cli::parse());
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
