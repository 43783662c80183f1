//! `linfold`: verify fold-product ideal statements on arrangement files.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use commands::{RowSpec, ScanFamily};
use linfold_core::verify::FoldRange;
use linfold_core::{parse_arrangement, Arrangement, Budget, Error};
use report::Report;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "linfold", version, about = "Fold-product ideals of hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest S-pair degree a Gröbner computation may reach.
    #[arg(long, global = true, default_value_t = 60)]
    budget_degree: u32,
    /// Include wall-clock time in the JSON report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args)]
struct Input {
    /// Arrangement file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Rank-2 flats and p(A).
    Flats(Input),
    /// Minimal linear dependencies among the forms.
    Circuits(Input),
    /// Generators of I_a.
    Fold {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        a: usize,
    },
    /// Graded Betti table of R/I_a (default a = n - 2).
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        a: Option<usize>,
    },
    /// Betti table of R/I_{n-2} against the rank formula.
    VerifyMain(Input),
    /// Linear resolutions and power identities in two variables.
    VerifyK2 {
        #[command(flatten)]
        input: Input,
        /// Check a single fold index instead of all of them.
        #[arg(long)]
        a: Option<usize>,
    },
    /// Ranks of the resolution of R/I_{n-1}.
    VerifyTop(Input),
    /// Kernel of φ_A against the circuit space, degree by degree.
    Kernel {
        #[command(flatten)]
        input: Input,
        /// Highest degree checked (default 2n).
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Cohen-Macaulay criterion for R/I_{n-2}.
    Cm(Input),
    /// Primary decomposition of I_{n-2} for line arrangements.
    Primary(Input),
    /// Presentation ideal of the second order fiber.
    Ot2(Input),
    /// Generators of the symmetric ideal.
    Sym(Input),
    /// Determinant of the content matrix of chosen symmetric generators.
    Sylvester {
        #[command(flatten)]
        input: Input,
        /// KIND:i,j,k with KIND one of L, A, B, C; repeat once per row.
        #[arg(long = "row", required = true, value_parser = commands::parse_row)]
        rows: Vec<RowSpec>,
        /// Comma-separated indices of the forms in the sequence.
        #[arg(long, required = true, value_delimiter = ',')]
        seq: Vec<usize>,
    },
    /// Resolve I_a over a family of arrangements.
    Scan {
        #[arg(long, value_enum, default_value_t = FamilyKind::Multisets)]
        family: FamilyKind,
        /// Base forms for multiset families.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// all, top-minus:C or between:LO:HI.
        #[arg(long, default_value = "all", value_parser = commands::parse_range)]
        range: FoldRange,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Multisets,
    Random,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Flats(_) => "flats",
            Command::Circuits(_) => "circuits",
            Command::Fold { .. } => "fold",
            Command::Betti { .. } => "betti",
            Command::VerifyMain(_) => "verify-main",
            Command::VerifyK2 { .. } => "verify-k2",
            Command::VerifyTop(_) => "verify-top",
            Command::Kernel { .. } => "kernel",
            Command::Cm(_) => "cm",
            Command::Primary(_) => "primary",
            Command::Ot2(_) => "ot2",
            Command::Sym(_) => "sym",
            Command::Sylvester { .. } => "sylvester",
            Command::Scan { .. } => "scan",
        }
    }

    fn input(&self) -> Option<&PathBuf> {
        match self {
            Command::Flats(i)
            | Command::Circuits(i)
            | Command::VerifyMain(i)
            | Command::VerifyTop(i)
            | Command::Cm(i)
            | Command::Primary(i)
            | Command::Ot2(i)
            | Command::Sym(i) => Some(&i.input),
            Command::Fold { input, .. }
            | Command::Betti { input, .. }
            | Command::VerifyK2 { input, .. }
            | Command::Kernel { input, .. }
            | Command::Sylvester { input, .. } => Some(&input.input),
            Command::Scan { input, .. } => input.as_ref(),
        }
    }
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn load(path: &PathBuf) -> Result<(Arrangement, String), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let digest = format!("{:x}", Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Failure::Usage(format!("{}: not UTF-8", path.display())))?;
    let a = parse_arrangement(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok((a, digest))
}

fn run(cmd: Command, report: &mut Report, arrangement: Option<Arrangement>) -> Result<(), Failure> {
    let need = || arrangement.clone().ok_or_else(|| Failure::Usage("--input is required".into()));
    if let Some(a) = &arrangement {
        commands::describe(a, report);
    }
    match cmd {
        Command::Flats(_) => commands::flats(&need()?, report)?,
        Command::Circuits(_) => commands::circuits_cmd(&need()?, report)?,
        Command::Fold { a, .. } => commands::fold(&need()?, a, report)?,
        Command::Betti { a, .. } => {
            let arr = need()?;
            let k = a.unwrap_or(arr.len().saturating_sub(2));
            commands::betti(&arr, k, report)?
        }
        Command::VerifyMain(_) => commands::verify_main(&need()?, report)?,
        Command::VerifyK2 { a, .. } => commands::verify_k2(&need()?, a, report)?,
        Command::VerifyTop(_) => commands::verify_top(&need()?, report)?,
        Command::Kernel { dmax, .. } => commands::kernel(&need()?, dmax, report)?,
        Command::Cm(_) => commands::cm(&need()?, report)?,
        Command::Primary(_) => commands::primary(&need()?, report)?,
        Command::Ot2(_) => commands::ot2(&need()?, report)?,
        Command::Sym(_) => commands::sym(&need()?, report)?,
        Command::Sylvester { rows, seq, .. } => commands::sylvester(&need()?, &rows, &seq, report)?,
        Command::Scan { family, max_n, k, n, count, seed, range, .. } => {
            let fam = match family {
                FamilyKind::Multisets => ScanFamily::Multisets { base: need()?, max_n },
                FamilyKind::Random => ScanFamily::Random { k, n, count, seed },
            };
            commands::scan(fam, range, report)?
        }
    }
    Ok(())
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = cli.common.timing.then(Instant::now);
    let budget_degree = cli.common.budget_degree;
    Budget::set_default(Budget { max_degree: budget_degree, ..Budget::default() });
    let name = cli.command.name();

    let loaded = match cli.command.input() {
        Some(p) => match load(p) {
            Ok((a, d)) => Some((a, d)),
            Err(Failure::Usage(m)) | Err(Failure::Budget(m)) => {
                eprintln!("error: {m}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
        None => None,
    };
    let (arrangement, digest) = match loaded {
        Some((a, d)) => (Some(a), Some(d)),
        None => (None, None),
    };

    let mut report = Report::new(name, digest.clone());
    match run(cli.command, &mut report, arrangement) {
        Ok(()) => {
            if cli.common.json {
                let v = report.to_json(budget_degree, started);
                emit(&(serde_json::to_string_pretty(&v).expect("json") + "\n"));
            } else {
                emit(&report.to_text());
            }
            if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(m)) => {
            if cli.common.json {
                let v = report::budget_error_json(name, digest, budget_degree, &m);
                emit(&(serde_json::to_string_pretty(&v).expect("json") + "\n"));
            }
            eprintln!("error: {m}");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
