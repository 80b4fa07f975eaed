//! Command-line front end: `audit`, `generate`, `compare`, `export`, `list`.
//!
//! Exit codes: 0 when every verdict holds, 1 when a verdict fails or a strict
//! generation leaves the gamut, 2 for usage and input errors.

pub mod commands;
pub mod svg;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` and runs the command, printing errors to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match commands::execute(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                camcmap::Error::GamutViolation { .. } => EXIT_FAIL,
                _ => EXIT_USAGE,
            }
        }
    };
    let _ = out.flush();
    code
}
