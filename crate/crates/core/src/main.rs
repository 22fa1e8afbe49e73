fn main() {
    std::process::exit(serre_core::cli::main_with_args(std::env::args_os()));
}
