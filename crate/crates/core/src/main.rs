fn main() {
    std::process::exit(phase_stopping::cli::main_with_args(std::env::args_os()));
}
