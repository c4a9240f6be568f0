fn main() {
    std::process::exit(torzar_cli::run(std::env::args_os()));
}
