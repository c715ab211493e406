use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code =
        gray_unit_distance::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
