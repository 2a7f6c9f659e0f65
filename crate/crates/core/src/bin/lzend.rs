fn main() {
    std::process::exit(lzend::cli::run(std::env::args_os()));
}
