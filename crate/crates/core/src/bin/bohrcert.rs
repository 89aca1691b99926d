fn main() {
    std::process::exit(bohrcert::cli::main(std::env::args_os()));
}
