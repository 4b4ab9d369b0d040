use std::io::{self, Write};

fn main() {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = vbraid::cli::run(std::env::args_os(), &mut io::stdin(), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
