fn main() {
    std::process::exit(lintur::cli::run(std::env::args_os()));
}
