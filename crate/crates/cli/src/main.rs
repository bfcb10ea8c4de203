use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod report;

#[derive(Parser, Debug)]
#[command(name = "ybalg", version, about = "Yang-Baxter algebras, Groebner bases and Segre products")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Degree bound for Groebner computations (at least 2).
    #[arg(long, short = 'd', global = true, default_value_t = 3)]
    degree: usize,

    /// Write the report here instead of standard output.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a quadratic set and list its r-orbits.
    Verify { solution: PathBuf },
    /// Yang-Baxter presentation of a solution.
    Present {
        solution: PathBuf,
        /// Also run the PBW and skew-polynomial checks.
        #[arg(long)]
        pbw: bool,
    },
    /// Truncated Groebner basis and Hilbert function, checked by elimination.
    Hilbert { solution: PathBuf },
    /// Cartesian product of two solutions, as a solution document.
    Product { first: PathBuf, second: PathBuf },
    /// Segre product presentation and its dimension identities.
    Segre { first: PathBuf, second: PathBuf },
    /// Yang-Baxter presentation of the product solution Z.
    Zalg { first: PathBuf, second: PathBuf },
    /// Kernel generators of the Segre map with soundness checks.
    Kernel { first: PathBuf, second: PathBuf },
    /// PBW certificate for the Segre product of two square-free solutions.
    CertifySquarefree { first: PathBuf, second: PathBuf },
    /// All solutions of a given order (at most 4), labelled.
    Enumerate { order: usize },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Library(ybalg::Error),
}

impl From<ybalg::Error> for Failure {
    fn from(e: ybalg::Error) -> Self {
        Failure::Library(e)
    }
}

fn load(path: &PathBuf) -> Result<ybalg::QuadraticSet, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    ybalg::load_solution(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if cli.degree < 2 {
        return Err(Failure::Input(format!("--degree must be at least 2, got {}", cli.degree)));
    }
    let out = match &cli.command {
        Command::Verify { solution } => report::verify(&load(solution)?, cli.json)?,
        Command::Present { solution, pbw } => report::present(&load(solution)?, *pbw, cli.json)?,
        Command::Hilbert { solution } => report::hilbert(&load(solution)?, cli.degree, cli.json)?,
        Command::Product { first, second } => report::product(&load(first)?, &load(second)?)?,
        Command::Segre { first, second } => report::segre(&load(first)?, &load(second)?, cli.json)?,
        Command::Zalg { first, second } => report::zalg(&load(first)?, &load(second)?, cli.json)?,
        Command::Kernel { first, second } => report::kernel(&load(first)?, &load(second)?, cli.json)?,
        Command::CertifySquarefree { first, second } => {
            report::certify(&load(first)?, &load(second)?, cli.json)?
        }
        Command::Enumerate { order } => report::enumerate(*order, cli.json)?,
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(mut text) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Library(e @ ybalg::Error::IdentityViolation(_)) => {
                    eprintln!("identity violation (this is a bug): {e}")
                }
                Failure::Library(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(status(&f))
        }
    }
}

fn status(f: &Failure) -> u8 {
    match f {
        Failure::Library(ybalg::Error::IdentityViolation(_)) => 2,
        _ => 1,
    }
}
