fn main() {
    std::process::exit(qconvex::cli::run_cli(std::env::args()));
}
