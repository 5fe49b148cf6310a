fn main() {
    std::process::exit(curvereg::cli::main_with_args(std::env::args_os()));
}
