fn main() {
    std::process::exit(rote::cli::run());
}
