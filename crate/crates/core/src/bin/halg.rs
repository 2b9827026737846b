fn main() {
    std::process::exit(halg::cli::run(std::env::args_os()));
}
