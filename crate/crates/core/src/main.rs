fn main() {
    std::process::exit(knotlab::cli::main());
}
