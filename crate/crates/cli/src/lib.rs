//! `proper-split`: analyze, construct, compare, and solve with proper
//! splittings of matrices stored in plain-text files.

pub mod commands;
pub mod matrix_file;
pub mod payload;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use proper_split::tolerances::RANK_RTOL_ENV;
use proper_split::Tolerances;

pub use commands::{Exit, Outcome};
pub use matrix_file::{MatrixFile, MatrixFileError, ParseError};
pub use report::{InputDigest, ReportDocument, ReportError, Warning, WarningClass};

#[derive(Debug, Parser)]
#[command(name = "proper-split", version, about = "Proper splittings T = U - V and the iterative reduced solution of TX = W")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Relative singular-value cutoff for numerical rank [default: max(m,n)*eps*64]
    #[arg(long, global = true, env = RANK_RTOL_ENV, value_name = "RTOL")]
    pub tol_rank: Option<f64>,
    /// Tolerance for Hermitian and subspace tests
    #[arg(long, global = true, default_value_t = 1e-10, value_name = "TOL")]
    pub tol_sym: f64,
    /// Tolerance for positive semidefiniteness
    #[arg(long, global = true, default_value_t = 1e-10, value_name = "TOL")]
    pub tol_psd: f64,
    /// Largest condition number accepted when inverting
    #[arg(long, global = true, default_value_t = 1e12, value_name = "COND")]
    pub cond_max: f64,
    /// Write the JSON report to PATH, or to stdout for "-"
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Suppress the human-readable summary
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

impl GlobalArgs {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances { rank_rtol: self.tol_rank, sym_tol: self.tol_sym, psd_tol: self.tol_psd, cond_max: self.cond_max }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// U is the partial isometry of the polar decomposition of T
    Polar,
    /// U is the oblique projector onto R(T) along N(T)
    Projection,
    /// U is the orthogonal projector onto R(T); T must be normal
    RangeProjector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CompareBy {
    /// 0 <= T^+ V1 <= T^+ V2 and N(V1) = N(V2)
    #[value(name = "V")]
    V,
    /// 0 <= T^+ U1 <= T^+ U2 <= P_{T*}
    #[value(name = "U")]
    U,
    /// P_{T*} <= T^+ U1 <= T^+ U2
    #[value(name = "U-above")]
    UAbove,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate T = U - (U - T) and report its convergence diagnostics
    Analyze {
        t: PathBuf,
        u: PathBuf,
    },
    /// Build a structured splitting of T
    Construct {
        t: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_name = "FILE")]
        u_out: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        v_out: Option<PathBuf>,
    },
    /// Iterate X <- Y_M X + Z_M to the reduced solution of TX = W
    Solve {
        t: PathBuf,
        u: PathBuf,
        w: PathBuf,
        /// "min-norm" for M = R(T*), or a file holding a basis of M as columns
        #[arg(long, default_value = "min-norm", value_name = "min-norm|FILE")]
        subspace: String,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
        #[arg(long, default_value_t = 1e-10)]
        step_tol: f64,
        #[arg(long, value_name = "FILE")]
        x_out: Option<PathBuf>,
    },
    /// Compare the convergence of two splittings of T
    Compare {
        t: PathBuf,
        u1: PathBuf,
        u2: PathBuf,
        #[arg(long, value_enum)]
        by: CompareBy,
        /// Matrix of the second splitting when it is not T
        #[arg(long, value_name = "FILE")]
        t2: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Construct { .. } => "construct",
            Command::Solve { .. } => "solve",
            Command::Compare { .. } => "compare",
        }
    }
}

/// Parses `args`, runs the command, and returns the process exit code.
pub fn run<I, A>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Input.code() } else { Exit::Success.code() };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let outcome = commands::execute(&cli);
    let doc = outcome.document(cli.command.name());

    let json_to_stdout = cli.global.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if !cli.global.quiet && !json_to_stdout {
        for line in &outcome.summary {
            let _ = writeln!(stdout, "{line}");
        }
    }
    for w in &doc.warnings {
        match w.class {
            WarningClass::InvalidInput => {
                let _ = writeln!(stderr, "error: {}", w.message);
            }
            _ if !cli.global.quiet => {
                let _ = writeln!(stderr, "warning: {}", w.message);
            }
            _ => {}
        }
    }
    let mut exit = outcome.exit;
    match cli.global.json.as_deref() {
        Some(_) if json_to_stdout => {
            let _ = write!(stdout, "{}", doc.to_json());
        }
        Some(path) => {
            if let Err(e) = std::fs::write(path, doc.to_json()) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                exit = Exit::Input;
            }
        }
        None => {}
    }
    exit.code()
}
