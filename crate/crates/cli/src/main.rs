use clap::Parser;

fn main() {
    let cli = harmonica_cli::Cli::parse();
    std::process::exit(harmonica_cli::run(cli));
}
