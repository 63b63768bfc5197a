fn main() {
    std::process::exit(alpha_dtm::cli::run(std::env::args_os()));
}
