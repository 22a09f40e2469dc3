use std::io::Write;

fn main() {
    let out = cubesum::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr.trim_end());
    }
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
