fn main() {
    std::process::exit(gf2_hermite::cli::main_with_args(std::env::args_os()));
}
