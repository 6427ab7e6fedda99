use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use recip_cli::{cmd_analyze, cmd_corpus, corpus_table, AnalyzeOptions, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "recip", version, about = "Decide whether a plane curve's coordinate ring is Egyptian")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Flags {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Bound for the pole semigroup bitmap
    #[arg(long, value_name = "B")]
    bound: Option<u64>,
    /// Initial number of series terms for valuations
    #[arg(long, value_name = "N")]
    truncation: Option<usize>,
}

impl Flags {
    fn options(&self) -> AnalyzeOptions {
        AnalyzeOptions { bound: self.bound, truncation: self.truncation }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one polynomial in x and y
    Analyze {
        poly: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Analyze a file with one polynomial per line
    Corpus {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { poly, flags } => {
            let (doc, code) = cmd_analyze(&poly, &flags.options());
            if flags.json {
                println!("{}", doc.to_json());
            } else {
                print!("{doc}");
            }
            if let Some(e) = &doc.error {
                eprintln!("error: {}: {e}", doc.status);
            }
            code
        }
        Command::Corpus { file, flags } => match std::fs::read_to_string(&file) {
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", file.display());
                EXIT_INPUT
            }
            Ok(text) => {
                let (rows, code) = cmd_corpus(&text, &flags.options());
                if flags.json {
                    for r in &rows {
                        println!("{}", r.doc.to_json());
                    }
                } else {
                    print!("{}", corpus_table(&rows));
                }
                code
            }
        },
    };
    ExitCode::from(code as u8)
}
