//! Serializable views of the library reports.

use proper_split::convergence::{TdvPsdCheck, UdtSandwichCheck};
use proper_split::solver::SolveReport;
use proper_split::splitting::{HermitianFlags, IdentityResiduals, PsdEquivalents};
use proper_split::{ComparisonVerdict, ConvergenceReport, Matrix, SplittingDiagnostics};
use serde::Serialize;

/// Row-major real and imaginary parts, with negative zeros written as zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixView {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<&Matrix> for MatrixView {
    fn from(m: &Matrix) -> Self {
        let entries: Vec<_> = m.to_rows().into_iter().flatten().collect();
        Self {
            rows: m.rows(),
            cols: m.cols(),
            re: entries.iter().map(|z| z.re + 0.0).collect(),
            im: entries.iter().map(|z| z.im + 0.0).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TdvPsdView {
    pub tdv_psd: bool,
    pub tv_star_psd_rank: bool,
    pub sandwich: bool,
    pub formula_holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

impl From<&TdvPsdCheck> for TdvPsdView {
    fn from(c: &TdvPsdCheck) -> Self {
        Self {
            tdv_psd: c.tdv_psd,
            tv_star_psd_rank: c.tv_star_psd_rank,
            sandwich: c.sandwich,
            formula_holds: c.formula_holds,
            lhs: c.lhs,
            rhs: c.rhs,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct UdtSandwichView {
    pub udt_sandwich: bool,
    pub formula_holds: bool,
    pub lhs: f64,
    pub rhs: Option<f64>,
}

impl From<&UdtSandwichCheck> for UdtSandwichView {
    fn from(c: &UdtSandwichCheck) -> Self {
        Self { udt_sandwich: c.udt_sandwich, formula_holds: c.formula_holds, lhs: c.lhs, rhs: c.rhs }
    }
}

#[derive(Debug, Serialize)]
pub struct ConvergenceView {
    pub rho_udv: f64,
    pub verdict: &'static str,
    pub converges: bool,
    pub tdv_psd: TdvPsdView,
    pub udt_sandwich: UdtSandwichView,
}

impl From<&ConvergenceReport> for ConvergenceView {
    fn from(r: &ConvergenceReport) -> Self {
        Self {
            rho_udv: r.rho_udv,
            verdict: r.verdict.as_str(),
            converges: r.converges,
            tdv_psd: (&r.tdv_criterion).into(),
            udt_sandwich: (&r.udt_criterion).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HermitianFlagsView {
    pub v_t_star: bool,
    pub u_t_star: bool,
    pub v_u_star: bool,
    pub udv: bool,
    pub tdu: bool,
    pub tdv: bool,
}

impl From<&HermitianFlags> for HermitianFlagsView {
    fn from(f: &HermitianFlags) -> Self {
        Self { v_t_star: f.vt_star, u_t_star: f.ut_star, v_u_star: f.vu_star, udv: f.udv, tdu: f.tdu, tdv: f.tdv }
    }
}

#[derive(Debug, Serialize)]
pub struct PsdEquivalentsView {
    pub product_psd_with_rank: bool,
    pub complement_below_projector: bool,
}

impl From<&PsdEquivalents> for PsdEquivalentsView {
    fn from(p: &PsdEquivalents) -> Self {
        Self { product_psd_with_rank: p.product_psd_with_rank, complement_below_projector: p.complement_below_projector }
    }
}

#[derive(Debug, Serialize)]
pub struct IdentitiesView {
    pub factorization: f64,
    pub pinv_formula: f64,
    pub reverse_order: f64,
}

impl From<&IdentityResiduals> for IdentitiesView {
    fn from(r: &IdentityResiduals) -> Self {
        Self { factorization: r.factorization, pinv_formula: r.pinv_formula, reverse_order: r.reverse_order }
    }
}

#[derive(Debug, Serialize)]
pub struct DiagnosticsView {
    pub udv: MatrixView,
    pub tdv: MatrixView,
    pub tdu: MatrixView,
    pub udt: MatrixView,
    pub rho_udv: f64,
    pub rho_tdv: f64,
    pub rho_tdu: f64,
    pub hermitian: HermitianFlagsView,
    pub psd_udv: bool,
    pub psd_udv_equivalents: PsdEquivalentsView,
    pub psd_udt: bool,
    pub psd_udt_equivalents: PsdEquivalentsView,
    pub identity_residuals: IdentitiesView,
}

impl From<&SplittingDiagnostics> for DiagnosticsView {
    fn from(d: &SplittingDiagnostics) -> Self {
        Self {
            udv: (&d.udv).into(),
            tdv: (&d.tdv).into(),
            tdu: (&d.tdu).into(),
            udt: (&d.udt).into(),
            rho_udv: d.rho_udv,
            rho_tdv: d.rho_tdv,
            rho_tdu: d.rho_tdu,
            hermitian: (&d.hermitian_flags).into(),
            psd_udv: d.psd_udv,
            psd_udv_equivalents: (&d.psd_udv_equivalents).into(),
            psd_udt: d.psd_udt,
            psd_udt_equivalents: (&d.psd_udt_equivalents).into(),
            identity_residuals: (&d.identities).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SolveView {
    pub converged: bool,
    pub iterations: usize,
    pub final_step: Option<f64>,
    pub residual: f64,
    pub rho_ym: f64,
    pub oracle_gap: f64,
    pub hermitian: bool,
    pub psd: bool,
    pub x: MatrixView,
}

impl From<&SolveReport> for SolveView {
    fn from(r: &SolveReport) -> Self {
        Self {
            converged: r.converged,
            iterations: r.iterations,
            final_step: r.step_norms.last().copied(),
            residual: r.residual,
            rho_ym: r.rho_ym,
            oracle_gap: r.oracle_gap,
            hermitian: r.classification.hermitian,
            psd: r.classification.psd,
            x: (&r.x).into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ComparisonView {
    pub preconditions_hold: bool,
    pub rho1: f64,
    pub rho2: f64,
    pub ordering_holds: bool,
    pub radii_ordered: bool,
    pub failed_preconditions: Vec<String>,
}

impl From<&ComparisonVerdict> for ComparisonView {
    fn from(v: &ComparisonVerdict) -> Self {
        let failed = if v.detail.is_empty() { Vec::new() } else { v.detail.split("; ").map(str::to_owned).collect() };
        Self {
            preconditions_hold: v.preconditions_hold,
            rho1: v.rho1,
            rho2: v.rho2,
            ordering_holds: v.ordering_holds,
            radii_ordered: v.radii_ordered,
            failed_preconditions: failed,
        }
    }
}

pub fn to_value<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("payload views serialize")
}
