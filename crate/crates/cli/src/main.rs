use std::io::{self, BufReader};

fn main() {
    let stdin = io::stdin();
    let code = seidel_cli::run(
        std::env::args_os(),
        &mut BufReader::new(stdin.lock()),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
