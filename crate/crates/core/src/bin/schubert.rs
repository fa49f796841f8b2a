fn main() {
    std::process::exit(schubert_core::cli::run(std::env::args_os()));
}
