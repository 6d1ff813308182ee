fn main() {
    std::process::exit(bbtorus::cli::main_entry(std::env::args_os()));
}
