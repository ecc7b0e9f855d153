use std::io::Write as _;

fn main() {
    let result = treeduce::cli::run(std::env::args().skip(1));
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let _ = stdout.write_all(result.stdout.as_bytes());
    let _ = stderr.write_all(result.stderr.as_bytes());
    let _ = stdout.flush();
    let _ = stderr.flush();
    std::process::exit(result.exit_code);
}
