fn main() {
    std::process::exit(landaukit::cli::main_entry());
}
