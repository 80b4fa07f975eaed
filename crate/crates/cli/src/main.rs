fn main() {
    std::process::exit(camcmap_cli::run(std::env::args_os()));
}
