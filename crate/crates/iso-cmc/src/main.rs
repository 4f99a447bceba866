use clap::Parser;

fn main() {
    let cli = iso_cmc::cli::Cli::parse();
    std::process::exit(iso_cmc::cli::run(cli));
}
