fn main() {
    std::process::exit(lrdraw::cli::run(std::env::args_os()));
}
