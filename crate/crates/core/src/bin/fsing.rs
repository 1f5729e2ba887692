use clap::Parser;

fn main() {
    std::process::exit(fsing::cli::run(fsing::cli::Cli::parse()));
}
