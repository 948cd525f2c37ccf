fn main() {
    std::process::exit(additive_digits::cli::run(std::env::args_os()));
}
