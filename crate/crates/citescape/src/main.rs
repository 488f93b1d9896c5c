fn main() {
    std::process::exit(citescape::cli::run());
}
