use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::json;

use stable_closure_cli::{exit_code, render, run_text, Registry};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Exact B-stable ideal, centroid and central-closure reports.
#[derive(Parser, Debug)]
#[command(name = "stable-closure", version, after_help = commands_help())]
struct Cli {
    /// Subcommand, see the list below
    command: String,
    /// Job descriptor (JSON)
    #[arg(long, short)]
    input: PathBuf,
    /// Write the report here instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Radical strategy: auto, trace-form, composition-series, element-enumeration
    #[arg(long)]
    radical: Option<String>,
    /// Smash construction for `smash`: ah, nu, sigma, ordinary
    #[arg(long)]
    product: Option<String>,
}

fn commands_help() -> String {
    let mut s = String::from("Commands:\n");
    for (n, a) in Registry::default().describe() {
        s.push_str(&format!("  {n:<12} {a}\n"));
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match std::fs::read_to_string(&cli.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.input.display());
            return ExitCode::from(2);
        }
    };
    let result = run_text(&cli.command, &text, cli.radical.as_deref(), cli.product.as_deref());
    let code = exit_code(&result);
    let value = match &result {
        Ok(o) => o.report.clone(),
        Err(e) => json!({ "error": e.to_string() }),
    };
    let body = match cli.format {
        Format::Json => render::json(&value),
        Format::Text => render::text(&value),
    };
    if let Err(e) = &result {
        eprintln!("error: {e}");
    }
    match &cli.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &body) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    ExitCode::from(code as u8)
}
