fn main() {
    std::process::exit(hypercorr::cli::run(std::env::args()));
}
