use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

#[derive(Parser)]
#[command(name = "cmreg", version, about = "Groebner bases, Hilbert functions, local cohomology and regularity bound audits")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Term order: lex, grlex, grevlex or block(k). Defaults to the file's order, then grevlex.
    #[arg(long, global = true)]
    pub order: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Independent random changes of coordinates for generic initial ideals.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    /// Largest S-pair degree Buchberger may reach.
    #[arg(long, global = true, default_value_t = 40)]
    pub budget_degree: u64,
    /// Degree window `t0:t1` for cohomology tables.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub window: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Reject unknown keys in ideal files.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Series,
    Polynomial,
    Gotzmann,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Auto,
    Hpv,
    Ek,
    Gin,
    Koszul,
}

#[derive(Subcommand)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb { file: PathBuf },
    /// Initial ideal.
    In { file: PathBuf },
    /// Generic initial ideal.
    Gin { file: PathBuf },
    /// Hilbert series, polynomial, coefficients e_i, Gotzmann data and B_i.
    Hilbert {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Show::All)]
        show: Show,
    },
    /// Castelnuovo-Mumford regularity.
    Reg {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
    },
    /// Degree and arithmetic degree of a monomial ideal.
    Adeg { file: PathBuf },
    /// Table of h^i(R/I)_t.
    Cohomology { file: PathBuf },
    /// Lex-segment ideal with the same Hilbert function.
    LexSegment { file: PathBuf },
    /// Saturated generic hyperplane section.
    Section { file: PathBuf },
    /// Audit every bound on one ideal file or a directory of them.
    Audit {
        path: PathBuf,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Enumerate squarefree monomial ideals with bounded arithmetic degree.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        d: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.global) {
        Ok(out) => {
            print!("{}", out.stdout);
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(if out.violation { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
    }
}
