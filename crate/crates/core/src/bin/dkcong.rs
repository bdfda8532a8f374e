fn main() {
    std::process::exit(dkcong::cli::run(std::env::args_os()));
}
