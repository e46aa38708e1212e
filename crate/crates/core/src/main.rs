fn main() {
    std::process::exit(z2harm::cli::run(std::env::args_os()));
}
