fn main() {
    std::process::exit(sigma_prime::cli::run(std::env::args_os()));
}
