fn main() {
    std::process::exit(pentaflow::cli::main_with_args());
}
