fn main() {
    std::process::exit(sccdet::cli::run(std::env::args_os()));
}
