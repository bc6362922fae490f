fn main() {
    std::process::exit(collatz_words::cli::run());
}
