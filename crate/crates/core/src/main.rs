use clap::Parser;

fn main() {
    let cli = antichain_games::cli::Cli::parse();
    std::process::exit(antichain_games::cli::run(cli));
}
