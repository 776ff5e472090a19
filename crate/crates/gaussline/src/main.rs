use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(gaussline::cli::run(std::env::args()) as u8)
}
