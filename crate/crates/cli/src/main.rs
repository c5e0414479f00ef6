use std::process::ExitCode;

fn main() -> ExitCode {
    bikernel_cli::main_entry()
}
