//! Convergence of the splitting iteration and comparison of two splittings
//! under the Löwner order.

use crate::error::{Error, Result};
use crate::linalg::{
    approx_eq, is_hermitian, is_psd, loewner_leq, numeric_rank, orth_projector, pinv, polar_decompose,
    ranges_equal, spectral_radius,
};
use crate::matrix::Matrix;
use crate::splitting::{is_product_of_projections, polar_splitting, projection_splitting, range_projector_splitting, ProperSplitting};
use crate::tolerances::Tolerances;

/// Radii within this distance of one count as marginal.
pub const MARGINAL_BAND: f64 = 1e-9;

/// Relative tolerance for the closed-form radius identities.
pub const FORMULA_RTOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Converged,
    Marginal,
    Diverged,
}

impl Verdict {
    pub fn from_radius(rho: f64, tol: &Tolerances) -> Self {
        let band = MARGINAL_BAND.max(tol.psd_tol);
        if rho < 1.0 - band {
            Verdict::Converged
        } else if rho <= 1.0 + band {
            Verdict::Marginal
        } else {
            Verdict::Diverged
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Converged => "converged",
            Verdict::Marginal => "marginal",
            Verdict::Diverged => "diverged",
        }
    }
}

fn below_one(rho: f64) -> bool {
    rho < 1.0 - MARGINAL_BAND
}

fn formula_close(lhs: f64, rhs: f64) -> bool {
    (lhs - rhs).abs() <= FORMULA_RTOL * lhs.abs().max(rhs.abs()).max(1.0)
}

/// Four conditions that are equivalent for a proper splitting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TdvPsdCheck {
    /// `T^+ V` PSD.
    pub tdv_psd: bool,
    /// `TV^*` PSD with `r(TV^*) = r(V)`.
    pub tv_star_psd_rank: bool,
    /// `0 <= U^+ V <= P_{V^*}`.
    pub sandwich: bool,
    /// `U^+ V` PSD and `rho(U^+ V) = rho(T^+ V) / (1 + rho(T^+ V)) < 1`.
    pub formula_holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

impl TdvPsdCheck {
    pub fn flags(&self) -> [bool; 4] {
        [self.tdv_psd, self.tv_star_psd_rank, self.sandwich, self.formula_holds]
    }

    pub fn all_agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&x| x == f[0])
    }
}

/// Two conditions that are equivalent for a proper splitting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UdtSandwichCheck {
    /// `0 <= U^+ T <= P_{T^*}`.
    pub udt_sandwich: bool,
    /// `U^+ V` PSD and `rho(U^+ V) = (rho(T^+ U) - 1) / rho(T^+ U) < 1`.
    pub formula_holds: bool,
    pub lhs: f64,
    /// Undefined when `rho(T^+ U) = 0`, which only happens for `T = 0`.
    pub rhs: Option<f64>,
}

impl UdtSandwichCheck {
    pub fn agree(&self) -> bool {
        self.udt_sandwich == self.formula_holds
    }
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub rho_udv: f64,
    pub verdict: Verdict,
    pub converges: bool,
    pub tdv_criterion: TdvPsdCheck,
    pub udt_criterion: UdtSandwichCheck,
}

pub fn convergence_report(s: &ProperSplitting, tol: &Tolerances) -> ConvergenceReport {
    let (t, u, v) = (s.t(), s.u(), s.v());
    let t_pinv = pinv(t, tol);
    let u_pinv = pinv(u, tol);
    let udv = &u_pinv * v;
    let tdv = &t_pinv * v;
    let tdu = &t_pinv * u;
    let udt = &u_pinv * t;
    let radius = |a: &Matrix| spectral_radius(a).expect("products of a splitting are square");
    let rho_udv = radius(&udv);
    let rho_tdv = radius(&tdv);
    let rho_tdu = radius(&tdu);
    let udv_psd = is_psd(&udv, tol);

    let tv_star = t * &v.adjoint();
    let p_v_row = orth_projector(&v.adjoint(), tol);
    let rhs61 = rho_tdv / (1.0 + rho_tdv);
    let tdv_criterion = TdvPsdCheck {
        tdv_psd: is_psd(&tdv, tol),
        tv_star_psd_rank: is_psd(&tv_star, tol) && numeric_rank(&tv_star, tol) == numeric_rank(v, tol),
        sandwich: udv_psd && loewner_leq(&udv, &p_v_row, tol).unwrap_or(false),
        formula_holds: udv_psd && formula_close(rho_udv, rhs61) && below_one(rho_udv),
        lhs: rho_udv,
        rhs: rhs61,
    };

    let p_t_row = orth_projector(&t.adjoint(), tol);
    let rhs62 = (rho_tdu > 0.0).then(|| (rho_tdu - 1.0) / rho_tdu);
    let udt_criterion = UdtSandwichCheck {
        udt_sandwich: is_psd(&udt, tol) && loewner_leq(&udt, &p_t_row, tol).unwrap_or(false),
        formula_holds: udv_psd && rhs62.is_some_and(|r| formula_close(rho_udv, r)) && below_one(rho_udv),
        lhs: rho_udv,
        rhs: rhs62,
    };

    let verdict = Verdict::from_radius(rho_udv, tol);
    ConvergenceReport { rho_udv, verdict, converges: verdict == Verdict::Converged, tdv_criterion, udt_criterion }
}

/// Bound `rho(U^+ V) <= rho(X)` from a Hermitian solution `X` of `UX = V`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianBound {
    pub rho_bound: f64,
    pub rho_udv: f64,
    pub bound_holds: bool,
}

pub fn hermitian_solution_bound(s: &ProperSplitting, x_tilde: &Matrix, tol: &Tolerances) -> Result<HermitianBound> {
    let n = s.t().cols();
    if x_tilde.shape() != (n, n) {
        return Err(Error::NotApplicable(format!("candidate must be {n}x{n}")));
    }
    if !is_hermitian(x_tilde, tol) {
        return Err(Error::NotApplicable("candidate is not Hermitian".into()));
    }
    if !approx_eq(&(s.u() * x_tilde), s.v(), tol.identity_tol()) {
        return Err(Error::NotApplicable("candidate does not solve UX = V".into()));
    }
    let rho_bound = spectral_radius(x_tilde)?;
    if rho_bound.is_nan() || rho_bound >= 1.0 {
        return Err(Error::NotApplicable(format!("candidate has spectral radius {rho_bound} >= 1")));
    }
    let rho_udv = spectral_radius(&s.iteration_matrix(tol))?;
    Ok(HermitianBound { rho_bound, rho_udv, bound_holds: rho_udv <= rho_bound + MARGINAL_BAND })
}

/// Outcome of comparing the asymptotic rates of two splittings of one `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonVerdict {
    pub preconditions_hold: bool,
    pub rho1: f64,
    pub rho2: f64,
    /// `rho1 <= rho2 < 1`, asserted only when the preconditions hold.
    pub ordering_holds: bool,
    /// `rho1 <= rho2 < 1` regardless of the preconditions.
    pub radii_ordered: bool,
    /// Failed preconditions, separated by "; "; empty when all hold.
    pub detail: String,
}

fn same_t(s1: &ProperSplitting, s2: &ProperSplitting, tol: &Tolerances) -> Result<()> {
    if approx_eq(s1.t(), s2.t(), tol.identity_tol()) {
        Ok(())
    } else {
        Err(Error::MismatchedT)
    }
}

fn leq_or(a: &Matrix, b: &Matrix, tol: &Tolerances) -> bool {
    is_hermitian(a, tol) && is_hermitian(b, tol) && loewner_leq(a, b, tol).unwrap_or(false)
}

fn verdict(s1: &ProperSplitting, s2: &ProperSplitting, failed: Vec<&str>, tol: &Tolerances) -> ComparisonVerdict {
    let rho1 = spectral_radius(&s1.iteration_matrix(tol)).expect("square");
    let rho2 = spectral_radius(&s2.iteration_matrix(tol)).expect("square");
    let radii_ordered = rho1 <= rho2 + MARGINAL_BAND && below_one(rho2);
    let preconditions_hold = failed.is_empty();
    ComparisonVerdict {
        preconditions_hold,
        rho1,
        rho2,
        ordering_holds: preconditions_hold && radii_ordered,
        radii_ordered,
        detail: failed.join("; "),
    }
}

/// Hypotheses `0 <= T^+ V1 <= T^+ V2` and `N(V1) = N(V2)`.
pub fn compare_by_v(s1: &ProperSplitting, s2: &ProperSplitting, tol: &Tolerances) -> Result<ComparisonVerdict> {
    same_t(s1, s2, tol)?;
    let t_pinv = pinv(s1.t(), tol);
    let a1 = &t_pinv * s1.v();
    let a2 = &t_pinv * s2.v();
    let mut failed = Vec::new();
    if !is_psd(&a1, tol) {
        failed.push("T^+ V1 is not PSD");
    }
    if !leq_or(&a1, &a2, tol) {
        failed.push("T^+ V1 <= T^+ V2 fails");
    }
    if !ranges_equal(&s1.v().adjoint(), &s2.v().adjoint(), tol) {
        failed.push("N(V1) != N(V2)");
    }
    Ok(verdict(s1, s2, failed, tol))
}

/// Hypothesis chain `0 <= T^+ U1 <= T^+ U2 <= P_{T^*}`.
///
/// This chain does not imply the ordering: for `T = 1`, `U1 = 0.6`,
/// `U2 = 0.9` it holds while `rho1 = 2/3 > rho2 = 1/9`. Under it the radii
/// are ordered the other way. See [`compare_by_u_above_projector`].
pub fn compare_by_u(s1: &ProperSplitting, s2: &ProperSplitting, tol: &Tolerances) -> Result<ComparisonVerdict> {
    same_t(s1, s2, tol)?;
    let t_pinv = pinv(s1.t(), tol);
    let a1 = &t_pinv * s1.u();
    let a2 = &t_pinv * s2.u();
    let p = orth_projector(&s1.t().adjoint(), tol);
    let mut failed = Vec::new();
    if !is_psd(&a1, tol) {
        failed.push("T^+ U1 is not PSD");
    }
    if !leq_or(&a1, &a2, tol) {
        failed.push("T^+ U1 <= T^+ U2 fails");
    }
    if !leq_or(&a2, &p, tol) {
        failed.push("T^+ U2 <= P_{T^*} fails");
    }
    Ok(verdict(s1, s2, failed, tol))
}

/// Hypothesis chain `P_{T^*} <= T^+ U1 <= T^+ U2`, which does imply
/// `rho1 <= rho2 < 1`: taking pseudoinverses reverses it to
/// `U2^+ T <= U1^+ T <= P_{T^*}`, hence `0 <= U1^+ V1 <= U2^+ V2`.
pub fn compare_by_u_above_projector(
    s1: &ProperSplitting,
    s2: &ProperSplitting,
    tol: &Tolerances,
) -> Result<ComparisonVerdict> {
    same_t(s1, s2, tol)?;
    let t_pinv = pinv(s1.t(), tol);
    let a1 = &t_pinv * s1.u();
    let a2 = &t_pinv * s2.u();
    let p = orth_projector(&s1.t().adjoint(), tol);
    let mut failed = Vec::new();
    if !leq_or(&p, &a1, tol) {
        failed.push("P_{T^*} <= T^+ U1 fails");
    }
    if !leq_or(&a1, &a2, tol) {
        failed.push("T^+ U1 <= T^+ U2 fails");
    }
    Ok(verdict(s1, s2, failed, tol))
}

/// Polar splitting against the oblique-projection splitting, for `T` a
/// product of two orthogonal projectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionProductComparison {
    pub rho_polar: f64,
    pub rho_projection: f64,
    pub polar_converges: bool,
    pub projection_converges: bool,
    /// `rho_polar <= rho_projection < 1`.
    pub ordering_holds: bool,
}

/// Polar splitting against `T = P_T - V2`, for Hermitian `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianComparison {
    /// `P_T - |T|` PSD and `||P_T - T|| < 1`.
    pub applicable: bool,
    pub rho_polar: f64,
    /// `rho_polar <= rho_range_projector < 1`; only asserted when applicable.
    pub ordering_holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalComparison {
    pub rho_range_projector: f64,
    /// `||P_T - T||_2`.
    pub projector_gap: f64,
    pub converges: bool,
    /// `converges` agrees with `||P_T - T|| < 1`.
    pub gap_criterion_agrees: bool,
    pub hermitian: Option<HermitianComparison>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuredComparison {
    pub product_of_projections: Option<ProjectionProductComparison>,
    pub normal: Option<NormalComparison>,
}

pub fn structured_comparisons(t: &Matrix, tol: &Tolerances) -> Result<StructuredComparison> {
    if !t.is_square() {
        return Err(Error::NotApplicable(format!(
            "structured splittings need a square matrix, got {}x{}",
            t.rows(),
            t.cols()
        )));
    }
    let polar = polar_splitting(t, tol);
    let rho_polar = spectral_radius(&polar.iteration_matrix(tol))?;
    let polar_converges = below_one(rho_polar);

    let product_of_projections = if is_product_of_projections(t, tol) {
        let q = projection_splitting(t, tol)?;
        let rho_projection = spectral_radius(&q.iteration_matrix(tol))?;
        let projection_converges = below_one(rho_projection);
        Some(ProjectionProductComparison {
            rho_polar,
            rho_projection,
            polar_converges,
            projection_converges,
            ordering_holds: rho_polar <= rho_projection + MARGINAL_BAND && projection_converges,
        })
    } else {
        None
    };

    let normal = match range_projector_splitting(t, tol) {
        Ok(s) => {
            let rho = spectral_radius(&s.iteration_matrix(tol))?;
            let gap = s.v().norm_spectral();
            let converges = below_one(rho);
            let hermitian = is_hermitian(t, tol).then(|| {
                let modulus = polar_decompose(t, tol).modulus;
                let p = orth_projector(t, tol);
                let applicable = is_psd(&(&p - &modulus), tol) && gap < 1.0;
                HermitianComparison {
                    applicable,
                    rho_polar,
                    ordering_holds: applicable && rho_polar <= rho + MARGINAL_BAND && converges,
                }
            });
            Some(NormalComparison {
                rho_range_projector: rho,
                projector_gap: gap,
                converges,
                gap_criterion_agrees: converges == (gap < 1.0 - MARGINAL_BAND),
                hermitian,
            })
        }
        Err(Error::NotNormal) => None,
        Err(e) => return Err(e),
    };

    if product_of_projections.is_none() && normal.is_none() {
        return Err(Error::NotApplicable(
            "matrix is neither a product of two orthogonal projectors nor normal".into(),
        ));
    }
    Ok(StructuredComparison { product_of_projections, normal })
}
