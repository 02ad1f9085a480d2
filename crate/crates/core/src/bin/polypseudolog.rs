use std::process::ExitCode;

fn main() -> ExitCode {
    polypseudolog::cli::run(std::env::args_os())
}
