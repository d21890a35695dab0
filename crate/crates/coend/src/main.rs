fn main() {
    std::process::exit(coend::cli::run());
}
