use std::process::ExitCode;

fn main() -> ExitCode {
    lctfb::cli::main()
}
