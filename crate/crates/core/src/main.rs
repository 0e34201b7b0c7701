fn main() {
    std::process::exit(diffeomodel::cli::main_with_args(std::env::args_os()));
}
