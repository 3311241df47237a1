use std::io::Write;

use clap::Parser;
use gamma2d_cli::{run, Cli};

fn main() {
    let outcome = run(Cli::parse());
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = out.flush();
    let mut err = std::io::stderr().lock();
    let _ = err.write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.exit);
}
