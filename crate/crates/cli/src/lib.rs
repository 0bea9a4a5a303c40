//! The `harmonica` command line: argument definitions and the five
//! subcommands. `main` only parses and forwards to [`run`].

pub mod args;
pub mod commands;
pub mod exit;

use std::io::Write;

pub use args::{Cli, Command};
pub use exit::{CliError, ExitCode};

/// Runs one parsed invocation, writing to stdout/stderr, and returns the
/// process exit code.
pub fn run(cli: Cli) -> i32 {
    let bits = cli.precision_bits;
    let result = match cli.command {
        Command::Eval(a) => commands::eval::run(&a, bits),
        Command::Verify(a) => commands::verify::run(&a),
        Command::Limits(a) => commands::limits::run(&a, bits),
        Command::Bench(a) => commands::bench::run(&a, bits),
        Command::Index(a) => commands::index::run(&a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            for line in &out.notes {
                eprintln!("{line}");
            }
            out.code as i32
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.code() as i32
        }
    }
}
