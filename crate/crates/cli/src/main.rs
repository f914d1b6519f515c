use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = hocolim_cli::app::run(&args);
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.exit_code);
}
