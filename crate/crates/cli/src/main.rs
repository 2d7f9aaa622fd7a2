use std::io::Write;

fn main() {
    let (code, out, err) = lcmlat_cli::run_from(std::env::args_os());
    if !out.is_empty() {
        print!("{out}");
        let _ = std::io::stdout().flush();
    }
    if !err.is_empty() {
        eprint!("{err}");
    }
    std::process::exit(code);
}
