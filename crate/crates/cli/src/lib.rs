//! Command line interface: input parsing, dispatch, DOT/JSON export, and the
//! verification suite over enumerated lattices, random ideals, and the golden
//! examples.

pub mod commands;
pub mod dot;
pub mod verify;

use clap::Parser;

/// Parse `args` and run. Returns (exit code, stdout, stderr).
pub fn run_from<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match commands::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout with success
            if e.use_stderr() {
                return (2, String::new(), e.to_string());
            }
            return (0, e.to_string(), String::new());
        }
    };
    match commands::run(cli) {
        Ok(out) => (0, out, String::new()),
        Err(e) => (1, String::new(), format!("error: {e}\n")),
    }
}
