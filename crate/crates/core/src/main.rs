fn main() {
    std::process::exit(wspan::cli::run(std::env::args_os()));
}
