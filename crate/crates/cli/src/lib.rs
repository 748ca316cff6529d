//! The `qroot` command line: expression parsing, JSON and text codecs,
//! command dispatch and the verification suites.

pub mod app;
pub mod commands;
pub mod json;
pub mod parse;
pub mod text;
pub mod verify;

use std::io::Write;

use clap::Parser;

use app::{Cli, Format};

/// Exit status for a successful command or a passing suite.
pub const EXIT_OK: i32 = 0;
/// A verification suite found a failing check.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Usage, parse, schema or domain error.
pub const EXIT_USAGE: i32 = 2;

/// Cap the global rayon pool from QROOT_THREADS, if set.
pub fn init_threads() {
    if let Some(n) = std::env::var("QROOT_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Run with the given arguments, writing to `out` and `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match commands::execute(&cli.verb) {
        Ok((o, common)) => {
            let body = match common.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("values serialize"),
                Format::Text => o.text.trim_end().to_string(),
            };
            let _ = writeln!(out, "{}", body);
            match o.passed {
                Some(false) => EXIT_CHECK_FAILED,
                _ => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_USAGE
        }
    }
}
