fn main() {
    std::process::exit(bd2kit::cli::run(std::env::args_os()));
}
