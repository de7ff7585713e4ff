fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(mhc_cli::run(&args));
}
