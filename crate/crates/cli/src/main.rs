fn main() {
    std::process::exit(supermod_cli::run(std::env::args_os()));
}
