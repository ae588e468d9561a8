fn main() {
    std::process::exit(hopfpow::cli::main_entry());
}
