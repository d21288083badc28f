use clap::Parser;

fn main() {
    let cli = farpoint::Cli::parse();
    std::process::exit(farpoint::run(cli));
}
