fn main() {
    std::process::exit(frameforge::cli::run());
}
