fn main() {
    std::process::exit(grover_zeta::cli::main_with_args(std::env::args_os()));
}
