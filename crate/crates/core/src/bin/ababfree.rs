fn main() {
    std::process::exit(ababfree::cli::run(std::env::args_os()));
}
