use clap::Parser;
use dl_cli::{commands, Cli};

fn main() {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(output) => {
            if !output.is_empty() {
                println!("{output}");
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.code());
        }
    }
}
