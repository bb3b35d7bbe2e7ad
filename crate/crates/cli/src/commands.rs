use std::path::Path;

use proper_split::convergence::Verdict;
use proper_split::solver::SolveWarning;
use proper_split::{
    compare_by_u, compare_by_u_above_projector, compare_by_v, convergence_report, diagnostics, polar_splitting,
    projection_splitting, range_projector_splitting, solve_iterative, validate_proper, Error, IterationConfig,
    Matrix, ProperFailure, ProperSplitting, SolveError, Subspace, Tolerances,
};
use serde_json::{json, Map, Value};

use crate::matrix_file::{self, MatrixFile};
use crate::payload::{to_value, ComparisonView, ConvergenceView, DiagnosticsView, MatrixView, SolveView};
use crate::report::{InputDigest, ReportDocument, Warning, WarningClass};
use crate::{Cli, Command, CompareBy, Method};

/// Process exit codes, by outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    /// I/O, parse, shape, or flag error.
    Input = 1,
    /// Valid input whose condition is not met: not convergent, or comparison
    /// preconditions fail.
    Unmet = 2,
    /// Not a proper splitting, or the requested construction does not apply.
    Invalid = 3,
    /// The iteration did not reach the solution, or a comparison with its
    /// preconditions met did not order the radii.
    Iteration = 4,
    Unsolvable = 5,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Everything a command produced, ready to be rendered.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub exit: Exit,
    pub inputs: Vec<InputDigest>,
    pub payload: Value,
    pub warnings: Vec<Warning>,
    pub summary: Vec<String>,
}

impl Outcome {
    pub fn document(&self, command: &str) -> ReportDocument {
        ReportDocument::new(command, self.inputs.clone(), self.payload.clone(), self.warnings.clone())
    }
}

struct Done {
    exit: Exit,
    payload: Value,
    warnings: Vec<Warning>,
    summary: Vec<String>,
}

/// Early stop with an invalid-input warning.
struct Halt {
    exit: Exit,
    message: String,
    details: Map<String, Value>,
}

impl Halt {
    fn new(exit: Exit, message: impl Into<String>) -> Self {
        Self { exit, message: message.into(), details: Map::new() }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_owned(), value.into());
        self
    }
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::EmptyMatrix
            | Error::NonFinite { .. }
            | Error::ShapeMismatch(_)
            | Error::MismatchedT
            | Error::InvalidTolerance(_) => Exit::Input,
            Error::NotSolvable => Exit::Unsolvable,
            _ => Exit::Invalid,
        };
        let halt = Halt::new(exit, e.to_string());
        match e {
            Error::NotProper(f) => halt.with("proper", false).with("failure", failure_name(f)),
            _ => halt,
        }
    }
}

fn failure_name(f: ProperFailure) -> &'static str {
    match f {
        ProperFailure::Range => "range",
        ProperFailure::Nullspace => "nullspace",
        ProperFailure::RangeAndNullspace => "range-and-nullspace",
    }
}

fn warning(class: WarningClass, message: impl Into<String>) -> Warning {
    Warning { class, message: message.into() }
}

struct Session {
    tol: Tolerances,
    inputs: Vec<InputDigest>,
}

impl Session {
    fn load(&mut self, role: &str, path: &Path) -> Result<Matrix, Halt> {
        let file = MatrixFile::read(path).map_err(|e| Halt::new(Exit::Input, e.to_string()))?;
        self.inputs.push(InputDigest::of(role, &file.bytes));
        Ok(file.matrix)
    }

    fn load_pair(&mut self, t: &Path, role: &str, u: &Path) -> Result<(Matrix, Matrix), Halt> {
        let t = self.load("T", t)?;
        let u = self.load(role, u)?;
        if t.shape() != u.shape() {
            return Err(Halt::new(
                Exit::Input,
                format!("T is {}x{} but {role} is {}x{}", t.rows(), t.cols(), u.rows(), u.cols()),
            ));
        }
        Ok((t, u))
    }

    fn splitting(&mut self, t: &Path, role: &str, u: &Path) -> Result<ProperSplitting, Halt> {
        let (t, u) = self.load_pair(t, role, u)?;
        Ok(validate_proper(&t, &u, &self.tol)?)
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let mut session = Session { tol: cli.global.tolerances(), inputs: Vec::new() };
    let result = match session.tol.validate() {
        Err(e) => Err(Halt::new(Exit::Input, e.to_string())),
        Ok(()) => match &cli.command {
            Command::Analyze { t, u } => analyze(&mut session, t, u),
            Command::Construct { t, method, u_out, v_out } => {
                construct(&mut session, t, *method, u_out.as_deref(), v_out.as_deref())
            }
            Command::Solve { t, u, w, subspace, max_iter, step_tol, x_out } => {
                let cfg = IterationConfig { max_iter: *max_iter, step_tol: *step_tol, ..IterationConfig::default() };
                solve(&mut session, t, u, w, subspace, &cfg, x_out.as_deref())
            }
            Command::Compare { t, u1, u2, by, t2 } => compare(&mut session, t, u1, u2, *by, t2.as_deref()),
        },
    };
    let done = result.unwrap_or_else(|halt| {
        let mut payload = halt.details;
        payload.insert("error".to_owned(), Value::String(halt.message.clone()));
        Done {
            exit: halt.exit,
            payload: Value::Object(payload),
            warnings: vec![warning(WarningClass::InvalidInput, halt.message)],
            summary: Vec::new(),
        }
    });
    Outcome { exit: done.exit, inputs: session.inputs, payload: done.payload, warnings: done.warnings, summary: done.summary }
}

fn radius_warning(verdict: Verdict, rho: f64) -> Option<Warning> {
    match verdict {
        Verdict::Converged => None,
        Verdict::Marginal => Some(warning(WarningClass::Marginal, format!("rho(U^+ V) = {rho:.6e} is within the marginal band around 1"))),
        Verdict::Diverged => Some(warning(WarningClass::NonContraction, format!("rho(U^+ V) = {rho:.6e} >= 1"))),
    }
}

fn analyze(session: &mut Session, t: &Path, u: &Path) -> Result<Done, Halt> {
    let split = session.splitting(t, "U", u)?;
    let tol = session.tol;
    let diag = diagnostics(&split, &tol)?;
    let conv = convergence_report(&split, &tol);
    let (m, n) = split.t().shape();
    let payload = json!({
        "proper": true,
        "shape": [m, n],
        "convergence": to_value(&ConvergenceView::from(&conv)),
        "diagnostics": to_value(&DiagnosticsView::from(&diag)),
    });
    let summary = vec![
        format!("proper splitting of a {m}x{n} matrix"),
        format!("rho(U^+ V) = {:.6e} ({})", conv.rho_udv, conv.verdict.as_str()),
        format!("rho(T^+ V) = {:.6e}, rho(T^+ U) = {:.6e}", diag.rho_tdv, diag.rho_tdu),
    ];
    Ok(Done {
        exit: if conv.converges { Exit::Success } else { Exit::Unmet },
        payload,
        warnings: radius_warning(conv.verdict, conv.rho_udv).into_iter().collect(),
        summary,
    })
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Polar => "polar",
        Method::Projection => "projection",
        Method::RangeProjector => "range-projector",
    }
}

fn construct(
    session: &mut Session,
    t: &Path,
    method: Method,
    u_out: Option<&Path>,
    v_out: Option<&Path>,
) -> Result<Done, Halt> {
    let t = session.load("T", t)?;
    let tol = session.tol;
    let split = match method {
        Method::Polar => polar_splitting(&t, &tol),
        Method::Projection => projection_splitting(&t, &tol)?,
        Method::RangeProjector => range_projector_splitting(&t, &tol)?,
    };
    for (path, m) in [(u_out, split.u()), (v_out, split.v())] {
        if let Some(path) = path {
            matrix_file::write(path, m)
                .map_err(|e| Halt::new(Exit::Input, format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let conv = convergence_report(&split, &tol);
    let payload = json!({
        "method": method_name(method),
        "u": to_value(&MatrixView::from(split.u())),
        "v": to_value(&MatrixView::from(split.v())),
        "convergence": to_value(&ConvergenceView::from(&conv)),
    });
    let summary = vec![format!(
        "{} splitting: rho(U^+ V) = {:.6e} ({})",
        method_name(method),
        conv.rho_udv,
        conv.verdict.as_str()
    )];
    Ok(Done {
        exit: Exit::Success,
        payload,
        warnings: radius_warning(conv.verdict, conv.rho_udv).into_iter().collect(),
        summary,
    })
}

fn complement(session: &mut Session, spec: &str, t: &Matrix) -> Result<(&'static str, Subspace), Halt> {
    let tol = session.tol;
    if spec == "min-norm" {
        return Ok(("min-norm", Subspace::range_of(&t.adjoint(), &tol)));
    }
    let basis = session.load("M", Path::new(spec))?;
    if basis.rows() != t.cols() {
        return Err(Halt::new(
            Exit::Invalid,
            format!("basis of M has {} rows but T has {} columns", basis.rows(), t.cols()),
        ));
    }
    let m = Subspace::new(basis, &tol)?;
    if !m.is_complement_of(&Subspace::null_space_of(t, &tol), &tol) {
        return Err(Halt::new(Exit::Invalid, "M is not a complement of N(T)"));
    }
    Ok(("basis-file", m))
}

fn solve(
    session: &mut Session,
    t: &Path,
    u: &Path,
    w: &Path,
    subspace: &str,
    cfg: &IterationConfig,
    x_out: Option<&Path>,
) -> Result<Done, Halt> {
    cfg.validate().map_err(|e| Halt::new(Exit::Input, e.to_string()))?;
    let (t, u) = session.load_pair(t, "U", u)?;
    let w = session.load("W", w)?;
    let tol = session.tol;
    let split = validate_proper(&t, &u, &tol)?;
    let (kind, m) = complement(session, subspace, &t)?;

    let (report, exit, failure) = match solve_iterative(&split, &w, &m, cfg, &tol) {
        Ok(r) => (r, Exit::Success, None),
        Err(SolveError::Core(e)) => return Err(e.into()),
        Err(e) => {
            let reason = match &e {
                SolveError::Diverged(_) => "diverged",
                SolveError::MaxIterations(_) => "max-iterations",
                SolveError::Stagnated(_) => "stagnated",
                _ => "failed",
            };
            let report = e.report().cloned().expect("iteration failures carry a report");
            (report, Exit::Iteration, Some(reason))
        }
    };
    if exit == Exit::Success {
        if let Some(path) = x_out {
            matrix_file::write(path, &report.x)
                .map_err(|e| Halt::new(Exit::Input, format!("cannot write {}: {e}", path.display())))?;
        }
    }
    let mut warnings = Vec::new();
    if report.warning == Some(SolveWarning::NonContraction) {
        warnings.push(warning(WarningClass::NonContraction, format!("rho(Y_M) = {:.6e} >= 1", report.rho_ym)));
    }
    let payload = json!({
        "subspace": kind,
        "subspace_dim": m.dim(),
        "outcome": failure.unwrap_or("converged"),
        "report": to_value(&SolveView::from(&report)),
    });
    let summary = vec![format!(
        "{} after {} iterations: rho(Y_M) = {:.6e}, residual = {:.3e}, oracle gap = {:.3e}",
        failure.unwrap_or("converged"),
        report.iterations,
        report.rho_ym,
        report.residual,
        report.oracle_gap
    )];
    Ok(Done { exit, payload, warnings, summary })
}

fn by_name(by: CompareBy) -> &'static str {
    match by {
        CompareBy::V => "V",
        CompareBy::U => "U",
        CompareBy::UAbove => "U-above",
    }
}

fn compare(
    session: &mut Session,
    t: &Path,
    u1: &Path,
    u2: &Path,
    by: CompareBy,
    t2: Option<&Path>,
) -> Result<Done, Halt> {
    let s1 = session.splitting(t, "U1", u1)?;
    let s2 = match t2 {
        Some(t2) => session.splitting(t2, "U2", u2)?,
        None => session.splitting(t, "U2", u2)?,
    };
    let tol = session.tol;
    let verdict = match by {
        CompareBy::V => compare_by_v(&s1, &s2, &tol),
        CompareBy::U => compare_by_u(&s1, &s2, &tol),
        CompareBy::UAbove => compare_by_u_above_projector(&s1, &s2, &tol),
    }?;
    let exit = match (verdict.preconditions_hold, verdict.ordering_holds) {
        (true, true) => Exit::Success,
        (true, false) => Exit::Iteration,
        (false, _) => Exit::Unmet,
    };
    let mut payload = json!({ "by": by_name(by) });
    payload["verdict"] = to_value(&ComparisonView::from(&verdict));
    let status = match exit {
        Exit::Success => "ordering verified".to_owned(),
        Exit::Iteration => "preconditions hold but the radii are not ordered".to_owned(),
        _ => format!("preconditions fail: {}", verdict.detail),
    };
    let summary = vec![
        format!("rho1 = {:.6e}, rho2 = {:.6e}", verdict.rho1, verdict.rho2),
        status,
    ];
    Ok(Done { exit, payload, warnings: Vec::new(), summary })
}
