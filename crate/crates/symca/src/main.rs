fn main() {
    std::process::exit(symca::cli::run(std::env::args_os()));
}
