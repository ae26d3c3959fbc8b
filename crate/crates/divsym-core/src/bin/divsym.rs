fn main() {
    std::process::exit(divsym_core::cli::main_entry());
}
