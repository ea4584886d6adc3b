use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zdbox::commands::{self, Outcome, GUARD_OVERRIDE_VAR};

/// Certified boxicity of zero-divisor graphs.
#[derive(Debug, Parser)]
#[command(name = "zdbox", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify box(Γ(Z_N)) and print a readable report.
    Analyze { n: u64 },
    /// Certify box(Γ(Z_N)) and emit the certificate bundle as JSON.
    Certify {
        n: u64,
        /// Write the bundle here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Certify the bounds for Γ(Z_2^k).
    Boolean {
        #[arg(value_parser = clap::value_parser!(u32).range(2..=14))]
        k: u32,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-verify a certificate bundle from scratch.
    Verify { bundle: PathBuf },
    /// Brute-force boxicity of a small graph given as an edge list.
    Oracle {
        #[arg(long)]
        edges: PathBuf,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long)]
        max_nonedges: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Certify every N in a range, one row each.
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Equal-neighbourhood classes of Γ(Z_N) and their sizes.
    Classes { n: u64 },
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Analyze { n } => commands::analyze(n),
        Command::Certify { n, json } => commands::certify(n, json.as_deref()),
        Command::Boolean { k, json } => commands::boolean(k, json.as_deref()),
        Command::Verify { bundle } => commands::verify(&bundle),
        Command::Oracle { edges, max_dim, max_nonedges, max_vertices } => {
            let var = std::env::var(GUARD_OVERRIDE_VAR).ok();
            let (guard, lifted) = commands::oracle_guard(var.as_deref(), max_dim, max_nonedges, max_vertices);
            if lifted {
                eprintln!(
                    "warning: {GUARD_OVERRIDE_VAR} is set; oracle guards lifted to {} vertices, {} non-edges, \
                     dimension {}. Search cost grows as 2^(non-edges).",
                    guard.max_vertices, guard.max_nonedges, guard.max_dim
                );
            }
            commands::oracle(&edges, &guard)
        }
        Command::Scan { from, to } => commands::scan(from, to),
        Command::Classes { n } => commands::classes(n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(o) => {
            print!("{}", o.text);
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
