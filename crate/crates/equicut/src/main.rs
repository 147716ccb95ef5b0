fn main() {
    std::process::exit(equicut::cli::main_entry());
}
