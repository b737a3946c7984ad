fn main() -> std::process::ExitCode {
    nelson::cli::main()
}
