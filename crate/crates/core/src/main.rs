fn main() {
    std::process::exit(sparse_halves::cli::run(std::env::args_os()));
}
