fn main() {
    std::process::exit(qbirkhoff::cli::run(std::env::args_os()));
}
