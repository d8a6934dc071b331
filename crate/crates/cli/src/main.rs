use std::process::ExitCode;

fn main() -> ExitCode {
    twoclub_cli::cli_main(std::env::args_os())
}
