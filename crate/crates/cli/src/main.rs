fn main() {
    std::process::exit(pathcontract_cli::run(std::env::args().collect()));
}
