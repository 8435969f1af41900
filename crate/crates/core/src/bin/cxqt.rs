fn main() {
    std::process::exit(cxqt::cli::main());
}
