use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(latpoly::cli::run(std::env::args_os()) as u8)
}
