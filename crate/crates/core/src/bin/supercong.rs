fn main() {
    std::process::exit(supercong::cli::run());
}
