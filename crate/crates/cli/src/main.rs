use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = hyperlambda_cli::run(std::env::args_os(), &mut out, &mut std::io::stderr());
    out.flush().ok();
    std::process::exit(code);
}
