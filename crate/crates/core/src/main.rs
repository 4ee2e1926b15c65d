fn main() {
    std::process::exit(wgcalc::cli::main_with_args(std::env::args_os()));
}
