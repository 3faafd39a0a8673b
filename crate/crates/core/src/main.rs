fn main() {
    std::process::exit(workbench::cli::run_from_args(std::env::args_os()));
}
