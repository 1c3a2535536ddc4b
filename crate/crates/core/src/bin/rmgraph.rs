fn main() {
    std::process::exit(rmgraph::cli::main());
}
