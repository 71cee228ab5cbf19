use std::process::ExitCode;

fn main() -> ExitCode {
    zcqpp::cli::run()
}
