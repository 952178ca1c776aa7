use std::io::{self, Read, Write};
use std::process::ExitCode;

use affine_yh_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdin = String::new();
    let out = run(&cli, || {
        io::stdin().read_to_string(&mut stdin)?;
        Ok(stdin.clone())
    });
    if !out.stdout.is_empty() {
        let _ = writeln!(io::stdout(), "{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(io::stderr(), "{}", out.stderr);
    }
    ExitCode::from(out.code)
}
