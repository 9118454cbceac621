use poset_homology::cli;

fn main() {
    std::process::exit(cli::main_entry());
}
