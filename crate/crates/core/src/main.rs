use clap::Parser;

use tableau_forge::cli::{run, Cli};

fn main() {
    let out = run(Cli::parse());
    if !out.stdout.is_empty() {
        println!("{}", out.stdout.trim_end_matches('\n'));
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr);
    }
    std::process::exit(out.code);
}
