fn main() {
    std::process::exit(shockch::cli::run(std::env::args_os()));
}
