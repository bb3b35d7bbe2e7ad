//! The stationary iteration `X <- Y_M X + Z_M`, where `Y_M` and `Z_M` are the
//! reduced solutions for `M` of `UY = V` and `UZ = W`. When it converges the
//! limit is the reduced solution `X_M` of `TX = W`.

use thiserror::Error;

use crate::convergence::MARGINAL_BAND;
use crate::error::Error;
use crate::linalg::{approx_eq, is_hermitian, is_psd, orth_projector, pinv, polar_decompose, range_contained, spectral_radius};
use crate::matrix::Matrix;
use crate::reduced::projector_along_null;
use crate::splitting::{validate_proper, ProperSplitting};
use crate::subspace::Subspace;
use crate::tolerances::Tolerances;

/// Limit accepted when `||X - X_M||_F <= ORACLE_RTOL * (1 + ||X||_F)`.
pub const ORACLE_RTOL: f64 = 1e-7;

#[derive(Debug, Clone)]
pub struct IterationConfig {
    pub max_iter: usize,
    /// Stop once `||X^{i+1} - X^i||_F <= step_tol * (1 + ||X^{i+1}||_F)`.
    pub step_tol: f64,
    /// Starting iterate; zero when absent.
    pub x0: Option<Matrix>,
    /// Abort once `||X^i||_F > divergence_guard * (1 + ||X^0||_F + ||Z_M||_F)`.
    pub divergence_guard: f64,
}

impl Default for IterationConfig {
    fn default() -> Self {
        Self { max_iter: 10_000, step_tol: 1e-10, x0: None, divergence_guard: 1e12 }
    }
}

impl IterationConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.max_iter == 0 {
            return Err(Error::InvalidTolerance("max_iter must be at least 1".into()));
        }
        for (name, value) in [("step_tol", self.step_tol), ("divergence_guard", self.divergence_guard)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidTolerance(format!("{name} must be positive, got {value}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LimitClassification {
    pub hermitian: bool,
    pub psd: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveWarning {
    /// `rho(Y_M) >= 1 - 1e-9`: no geometric contraction for general starts.
    NonContraction,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub x: Matrix,
    pub iterations: usize,
    /// `||T X - W||_F`.
    pub residual: f64,
    /// `||X^{i+1} - X^i||_F` per iteration.
    pub step_norms: Vec<f64>,
    pub rho_ym: f64,
    pub converged: bool,
    /// `||X - Q_{M//N(T)} T^+ W||_F`.
    pub oracle_gap: f64,
    pub classification: LimitClassification,
    pub warning: Option<SolveWarning>,
}

/// Stage of a two-sided solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoSidedStep {
    /// `T X = W`.
    Left,
    /// `S^* Z = X^*`.
    Right,
}

impl std::fmt::Display for TwoSidedStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TwoSidedStep::Left => "step 1 (T X = W)",
            TwoSidedStep::Right => "step 2 (S^* Z = X^*)",
        })
    }
}

#[derive(Debug, Clone, Error)]
pub enum SolveError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("iteration diverged after {} steps", .0.iterations)]
    Diverged(Box<SolveReport>),
    #[error("no convergence within {} iterations", .0.iterations)]
    MaxIterations(Box<SolveReport>),
    /// Steps fell below `step_tol` but the iterate is not the reduced solution.
    #[error("iteration stalled {:.3e} away from the reduced solution", .0.oracle_gap)]
    Stagnated(Box<SolveReport>),
    #[error("{step}: {source}")]
    AtStep { step: TwoSidedStep, source: Box<SolveError> },
}

impl SolveError {
    /// The iteration report carried by the error, if any.
    pub fn report(&self) -> Option<&SolveReport> {
        match self {
            SolveError::Diverged(r) | SolveError::MaxIterations(r) | SolveError::Stagnated(r) => Some(r),
            SolveError::AtStep { source, .. } => source.report(),
            SolveError::Core(_) => None,
        }
    }
}

fn check_rhs(s: &ProperSplitting, w: &Matrix, tol: &Tolerances) -> Result<(), Error> {
    if w.rows() != s.t().rows() {
        return Err(Error::ShapeMismatch(format!("T has {} rows but W has {}", s.t().rows(), w.rows())));
    }
    if !range_contained(w, s.t(), tol) {
        return Err(Error::NotSolvable);
    }
    Ok(())
}

/// `(Y_M, Z_M)`.
pub fn build_iteration(s: &ProperSplitting, w: &Matrix, m: &Subspace, tol: &Tolerances) -> Result<(Matrix, Matrix), Error> {
    check_rhs(s, w, tol)?;
    let q = projector_along_null(s.u(), m, tol)?;
    let qu = &q * &pinv(s.u(), tol);
    Ok((&qu * s.v(), &qu * w))
}

pub fn solve_iterative(
    s: &ProperSplitting,
    w: &Matrix,
    m: &Subspace,
    cfg: &IterationConfig,
    tol: &Tolerances,
) -> Result<SolveReport, SolveError> {
    cfg.validate()?;
    check_rhs(s, w, tol)?;
    let q = projector_along_null(s.u(), m, tol)?;
    let qu = &q * &pinv(s.u(), tol);
    let y = &qu * s.v();
    let z = &qu * w;
    let oracle = &q * &(pinv(s.t(), tol) * w);
    let rho_ym = spectral_radius(&y)?;

    let (n, r) = (s.t().cols(), w.cols());
    let mut x = match &cfg.x0 {
        Some(x0) if x0.shape() != (n, r) => {
            return Err(Error::ShapeMismatch(format!("X0 must be {n}x{r}, got {}x{}", x0.rows(), x0.cols())).into());
        }
        Some(x0) => x0.clone(),
        None => Matrix::zeros(n, r),
    };
    let guard = cfg.divergence_guard * (1.0 + x.norm_fro() + z.norm_fro());

    let mut step_norms = Vec::new();
    let mut stopped = false;
    let mut blew_up = false;
    while step_norms.len() < cfg.max_iter {
        let next = &y * &x + &z;
        let step = (&next - &x).norm_fro();
        x = next;
        step_norms.push(step);
        let size = x.norm_fro();
        if size.is_nan() || size > guard {
            blew_up = true;
            break;
        }
        if step <= cfg.step_tol * (1.0 + size) {
            stopped = true;
            break;
        }
    }

    let oracle_gap = (&x - &oracle).norm_fro();
    let converged = stopped && oracle_gap <= ORACLE_RTOL * (1.0 + x.norm_fro());
    let report = SolveReport {
        iterations: step_norms.len(),
        residual: (s.t() * &x - w).norm_fro(),
        step_norms,
        rho_ym,
        converged,
        oracle_gap,
        classification: LimitClassification { hermitian: is_hermitian(&x, tol), psd: is_psd(&x, tol) },
        warning: (rho_ym >= 1.0 - MARGINAL_BAND).then_some(SolveWarning::NonContraction),
        x,
    };
    match (converged, stopped, blew_up) {
        (true, _, _) => Ok(report),
        (false, _, true) => Err(SolveError::Diverged(Box::new(report))),
        (false, true, _) => Err(SolveError::Stagnated(Box::new(report))),
        (false, false, _) => Err(SolveError::MaxIterations(Box::new(report))),
    }
}

/// `c U_T - (c U_T - A)` with `c = ||A||_2`: the polar splitting of `A / c`
/// scaled back, so that `rho(U^+ V) = 1 - sigma_min^+ / sigma_max < 1`.
pub fn scaled_polar_splitting(a: &Matrix, tol: &Tolerances) -> Result<ProperSplitting, Error> {
    let c = a.norm_spectral();
    let isometry = polar_decompose(a, tol).partial_isometry;
    let u = if c > 0.0 { isometry.scale_real(c) } else { isometry };
    validate_proper(a, &u, tol)
}

fn at(step: TwoSidedStep) -> impl Fn(SolveError) -> SolveError {
    move |e| SolveError::AtStep { step, source: Box::new(e) }
}

/// `TYS = W` in two one-sided stages: `X = Y_M` from `TX = W` with range in
/// `m`, then `Y = Z^*` for the minimum-norm `Z` with `S^* Z = X^*`. Both
/// stages use [`scaled_polar_splitting`].
pub fn solve_two_sided(
    t: &Matrix,
    s: &Matrix,
    w: &Matrix,
    m: &Subspace,
    cfg: &IterationConfig,
    tol: &Tolerances,
) -> Result<Matrix, SolveError> {
    let left = scaled_polar_splitting(t, tol).map_err(|e| at(TwoSidedStep::Left)(e.into()))?;
    let right = scaled_polar_splitting(&s.adjoint(), tol).map_err(|e| at(TwoSidedStep::Right)(e.into()))?;
    solve_two_sided_with(&left, &right, w, m, cfg, tol)
}

/// As [`solve_two_sided`] with explicit splittings of `T` and of `S^*`.
pub fn solve_two_sided_with(
    left: &ProperSplitting,
    right: &ProperSplitting,
    w: &Matrix,
    m: &Subspace,
    cfg: &IterationConfig,
    tol: &Tolerances,
) -> Result<Matrix, SolveError> {
    let s_star = right.t();
    if w.cols() != s_star.rows() {
        return Err(Error::ShapeMismatch(format!("W has {} columns but S has {}", w.cols(), s_star.rows())).into());
    }
    let x = solve_iterative(left, w, m, cfg, tol).map_err(at(TwoSidedStep::Left))?.x;
    let row_space = Subspace::range_of(&s_star.adjoint(), tol);
    let z = solve_iterative(right, &x.adjoint(), &row_space, cfg, tol).map_err(at(TwoSidedStep::Right))?.x;
    Ok(z.adjoint())
}

/// `T^+` as the limit of the iteration for `TX = P_{R(T)}` with `M = R(T^*)`.
pub fn pinv_via_splitting(
    t: &Matrix,
    s: &ProperSplitting,
    cfg: &IterationConfig,
    tol: &Tolerances,
) -> Result<Matrix, SolveError> {
    if !approx_eq(t, s.t(), tol.identity_tol()) {
        return Err(Error::MismatchedT.into());
    }
    let w = orth_projector(t, tol);
    let m = Subspace::range_of(&t.adjoint(), tol);
    Ok(solve_iterative(s, &w, &m, cfg, tol)?.x)
}
