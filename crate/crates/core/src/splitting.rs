//! Proper splittings `T = U - V`, where `R(U) = R(T)` and `N(U) = N(T)`.

use crate::error::{Error, ProperFailure, Result};
use crate::linalg::{
    checked_inverse, is_hermitian, is_normal, is_psd, loewner_leq, numeric_rank, oblique_projector,
    orth_projector, pinv, polar_decompose, range_contained, ranges_equal, spectral_radius,
};
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use crate::tolerances::Tolerances;

/// `T = U - V` with `V` stored as `U - T`.
#[derive(Debug, Clone)]
pub struct ProperSplitting {
    t: Matrix,
    u: Matrix,
    v: Matrix,
}

impl ProperSplitting {
    fn from_parts(t: Matrix, u: Matrix) -> Self {
        let v = &u - &t;
        Self { t, u, v }
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn u(&self) -> &Matrix {
        &self.u
    }

    pub fn v(&self) -> &Matrix {
        &self.v
    }

    /// `U^+ V`.
    pub fn iteration_matrix(&self, tol: &Tolerances) -> Matrix {
        pinv(&self.u, tol) * &self.v
    }
}

/// Checks that `u` splits `t` properly and returns the splitting.
pub fn validate_proper(t: &Matrix, u: &Matrix, tol: &Tolerances) -> Result<ProperSplitting> {
    t.check_same_shape(u, "splitting")?;
    let range_ok = ranges_equal(u, t, tol);
    let null_ok = ranges_equal(&u.adjoint(), &t.adjoint(), tol);
    let failure = match (range_ok, null_ok) {
        (true, true) => None,
        (false, true) => Some(ProperFailure::Range),
        (true, false) => Some(ProperFailure::Nullspace),
        (false, false) => Some(ProperFailure::RangeAndNullspace),
    };
    if let Some(f) = failure {
        return Err(Error::NotProper(f));
    }
    let s = ProperSplitting::from_parts(t.clone(), u.clone());
    // R(V) ⊆ R(T) and N(T) ⊆ N(V) follow from the two equalities; re-check
    // them so that rounding in V = U - T cannot slip through.
    if !range_contained(&s.v, t, tol) {
        return Err(Error::NotProper(ProperFailure::Range));
    }
    if !range_contained(&s.v.adjoint(), &t.adjoint(), tol) {
        return Err(Error::NotProper(ProperFailure::Nullspace));
    }
    Ok(s)
}

/// Hermitian-ness of six products that are equivalent for a proper splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HermitianFlags {
    pub vt_star: bool,
    pub ut_star: bool,
    pub vu_star: bool,
    pub udv: bool,
    pub tdu: bool,
    pub tdv: bool,
}

impl HermitianFlags {
    pub fn as_array(&self) -> [bool; 6] {
        [self.vt_star, self.ut_star, self.vu_star, self.udv, self.tdu, self.tdv]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&f| f == a[0])
    }
}

/// Two conditions that are each equivalent to a product being PSD.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PsdEquivalents {
    /// For `U^+ V`: `VU^*` PSD with `r(VU^*) = r(V)`.
    /// For `U^+ T`: `TU^*` PSD with `r(TU^*) = r(T)`.
    pub product_psd_with_rank: bool,
    /// For `U^+ V`: `U^+ T` Hermitian and `U^+ T <= P_{T^*}`.
    /// For `U^+ T`: `U^+ V` Hermitian and `U^+ V <= P_{T^*}`.
    pub complement_below_projector: bool,
}

/// Relative residuals `||lhs - rhs||_F / (1 + ||lhs||_F + ||rhs||_F)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResiduals {
    /// `T = U (I - U^+ V)`.
    pub factorization: f64,
    /// `T^+ = (I - U^+ V)^{-1} U^+`.
    pub pinv_formula: f64,
    /// `(T^+ U)^+ = U^+ T`.
    pub reverse_order: f64,
}

impl IdentityResiduals {
    pub fn max(&self) -> f64 {
        self.factorization.max(self.pinv_formula).max(self.reverse_order)
    }
}

#[derive(Debug, Clone)]
pub struct SplittingDiagnostics {
    pub udv: Matrix,
    pub tdv: Matrix,
    pub tdu: Matrix,
    pub udt: Matrix,
    pub rho_udv: f64,
    pub rho_tdv: f64,
    pub rho_tdu: f64,
    pub hermitian_flags: HermitianFlags,
    pub psd_udv: bool,
    pub psd_udv_equivalents: PsdEquivalents,
    pub psd_udt: bool,
    pub psd_udt_equivalents: PsdEquivalents,
    pub identities: IdentityResiduals,
}

fn relative_gap(lhs: &Matrix, rhs: &Matrix) -> f64 {
    (lhs - rhs).norm_fro() / (1.0 + lhs.norm_fro() + rhs.norm_fro())
}

fn hermitian_below(a: &Matrix, bound: &Matrix, tol: &Tolerances) -> bool {
    is_hermitian(a, tol) && loewner_leq(a, bound, tol).unwrap_or(false)
}

pub fn diagnostics(s: &ProperSplitting, tol: &Tolerances) -> Result<SplittingDiagnostics> {
    let (t, u, v) = (&s.t, &s.u, &s.v);
    let n = t.cols();
    let t_pinv = pinv(t, tol);
    let u_pinv = pinv(u, tol);
    let udv = &u_pinv * v;
    let tdv = &t_pinv * v;
    let tdu = &t_pinv * u;
    let udt = &u_pinv * t;

    let i_minus = Matrix::identity(n) - &udv;
    let inverse = checked_inverse(&i_minus, tol).ok_or(Error::SingularIteration)?;
    let identities = IdentityResiduals {
        factorization: relative_gap(t, &(u * &i_minus)),
        pinv_formula: relative_gap(&t_pinv, &(&inverse * &u_pinv)),
        reverse_order: relative_gap(&pinv(&tdu, tol), &udt),
    };

    let (th, uh) = (t.adjoint(), u.adjoint());
    let hermitian_flags = HermitianFlags {
        vt_star: is_hermitian(&(v * &th), tol),
        ut_star: is_hermitian(&(u * &th), tol),
        vu_star: is_hermitian(&(v * &uh), tol),
        udv: is_hermitian(&udv, tol),
        tdu: is_hermitian(&tdu, tol),
        tdv: is_hermitian(&tdv, tol),
    };

    let p_row = orth_projector(&th, tol);
    let vu_star = v * &uh;
    let tu_star = t * &uh;
    let psd_udv_equivalents = PsdEquivalents {
        product_psd_with_rank: is_psd(&vu_star, tol) && numeric_rank(&vu_star, tol) == numeric_rank(v, tol),
        complement_below_projector: hermitian_below(&udt, &p_row, tol),
    };
    let psd_udt_equivalents = PsdEquivalents {
        product_psd_with_rank: is_psd(&tu_star, tol) && numeric_rank(&tu_star, tol) == numeric_rank(t, tol),
        complement_below_projector: hermitian_below(&udv, &p_row, tol),
    };

    Ok(SplittingDiagnostics {
        rho_udv: spectral_radius(&udv)?,
        rho_tdv: spectral_radius(&tdv)?,
        rho_tdu: spectral_radius(&tdu)?,
        psd_udv: is_psd(&udv, tol),
        psd_udt: is_psd(&udt, tol),
        udv,
        tdv,
        tdu,
        udt,
        hermitian_flags,
        psd_udv_equivalents,
        psd_udt_equivalents,
        identities,
    })
}

/// `T = U_T - V` with `U_T` the partial isometry of the polar decomposition.
/// Here `U_T^* V = P_{T^*} - |T|`.
pub fn polar_splitting(t: &Matrix, tol: &Tolerances) -> ProperSplitting {
    let polar = polar_decompose(t, tol);
    ProperSplitting::from_parts(t.clone(), polar.partial_isometry)
}

/// `T = Q - V` with `Q = Q_{R(T)//N(T)}`; needs `R(T) ∔ N(T) = C^n`.
pub fn projection_splitting(t: &Matrix, tol: &Tolerances) -> Result<ProperSplitting> {
    t.check_square()?;
    let range = Subspace::range_of(t, tol);
    let null = Subspace::null_space_of(t, tol);
    let q = oblique_projector(&range, &null, tol)?;
    Ok(ProperSplitting::from_parts(t.clone(), q))
}

/// `T` is a product of two orthogonal projectors: `T = P_T P_{T^*}` and
/// `R(T) ∔ N(T) = C^n`.
pub fn is_product_of_projections(t: &Matrix, tol: &Tolerances) -> bool {
    if !t.is_square() {
        return false;
    }
    let product = orth_projector(t, tol) * orth_projector(&t.adjoint(), tol);
    let close = (t - &product).norm_fro() <= tol.identity_tol() * (1.0 + t.norm_fro());
    close && Subspace::range_of(t, tol).is_complement_of(&Subspace::null_space_of(t, tol), tol)
}

/// `T = P_T - V` for normal `T`.
pub fn range_projector_splitting(t: &Matrix, tol: &Tolerances) -> Result<ProperSplitting> {
    t.check_square()?;
    if !is_normal(t, tol) {
        return Err(Error::NotNormal);
    }
    Ok(ProperSplitting::from_parts(t.clone(), orth_projector(t, tol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::C64;

    fn real(rows: &[&[f64]]) -> Matrix {
        Matrix::from_real_rows(rows).unwrap()
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn validate_examples() {
        let t = real(&[&[3.0, -1.0], &[0.0, 2.0]]);
        let s = validate_proper(&t, &real(&[&[4.0, 2.0], &[1.0, 2.0]]), &tol()).unwrap();
        assert_eq!(s.v(), &real(&[&[1.0, 3.0], &[1.0, 0.0]]));

        let t = real(&[&[1.0, 0.0], &[1.0, 2.0]]);
        let s = validate_proper(&t, &real(&[&[1.0, 0.0], &[0.0, 2.0]]), &tol()).unwrap();
        assert_eq!(s.v(), &real(&[&[0.0, 0.0], &[-1.0, 0.0]]));

        let err = validate_proper(&Matrix::real_diag(&[1.0, 0.0]), &Matrix::real_diag(&[0.0, 1.0]), &tol());
        assert_eq!(err.unwrap_err(), Error::NotProper(ProperFailure::RangeAndNullspace));
    }

    #[test]
    fn validate_reports_which_condition_failed() {
        let t = real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let err = validate_proper(&t, &real(&[&[1.0, 0.0], &[1.0, 0.0]]), &tol()).unwrap_err();
        assert_eq!(err, Error::NotProper(ProperFailure::Range));
        let err = validate_proper(&t, &real(&[&[1.0, 1.0], &[0.0, 0.0]]), &tol()).unwrap_err();
        assert_eq!(err, Error::NotProper(ProperFailure::Nullspace));
        assert!(matches!(
            validate_proper(&t, &Matrix::identity(3), &tol()),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn diagnostics_marginal_pair() {
        let t = real(&[&[3.0, -1.0], &[0.0, 2.0]]);
        let s = validate_proper(&t, &real(&[&[4.0, 2.0], &[1.0, 2.0]]), &tol()).unwrap();
        let d = diagnostics(&s, &tol()).unwrap();
        assert!(d.udv.max_abs_diff(&real(&[&[0.0, 1.0], &[0.5, -0.5]])) < 1e-12);
        assert!(d.tdv.max_abs_diff(&real(&[&[0.5, 1.0], &[0.5, 0.0]])) < 1e-12);
        assert!((d.rho_udv - 1.0).abs() < 1e-12);
        assert!(d.identities.max() < 1e-12);
        assert!(d.hermitian_flags.all_agree());
    }

    #[test]
    fn diagnostics_lower_triangular_pair() {
        let t = real(&[&[1.0, 0.0], &[1.0, 2.0]]);
        let s = validate_proper(&t, &real(&[&[1.0, 0.0], &[0.0, 2.0]]), &tol()).unwrap();
        let d = diagnostics(&s, &tol()).unwrap();
        assert!(d.udt.max_abs_diff(&real(&[&[1.0, 0.0], &[0.5, 1.0]])) < 1e-12);
        assert!(d.udv.max_abs_diff(&real(&[&[0.0, 0.0], &[-0.5, 0.0]])) < 1e-12);
        assert!(d.hermitian_flags.all_agree() && !d.hermitian_flags.udv);
    }

    #[test]
    fn diagnostics_trivial_splitting() {
        let t = real(&[&[1.0, 2.0, 0.0], &[0.0, 1.0, 1.0]]);
        let s = validate_proper(&t, &t, &tol()).unwrap();
        let d = diagnostics(&s, &tol()).unwrap();
        assert_eq!(d.udv.norm_fro(), 0.0);
        assert_eq!((d.rho_udv, d.rho_tdv), (0.0, 0.0));
        assert!(d.hermitian_flags.as_array().iter().all(|&f| f));
        assert!(d.psd_udv && d.psd_udv_equivalents.complement_below_projector);
    }

    #[test]
    fn diagnostics_psd_equivalents_agree_on_scaled_family() {
        let t = real(&[&[2.0, 1.0], &[1.0, 3.0]]);
        for beta in [0.5, 1.0, 2.0] {
            let s = validate_proper(&t, &t.scale_real(1.0 + beta), &tol()).unwrap();
            let d = diagnostics(&s, &tol()).unwrap();
            assert!(d.psd_udv);
            assert!(d.psd_udv_equivalents.product_psd_with_rank);
            assert!(d.psd_udv_equivalents.complement_below_projector);
            assert!(d.psd_udt);
            assert!(d.psd_udt_equivalents.product_psd_with_rank);
            assert!(d.psd_udt_equivalents.complement_below_projector);
        }
    }

    #[test]
    fn polar_splitting_example() {
        let t = real(&[&[0.5, 0.0], &[-0.5, 0.0]]);
        let s = polar_splitting(&t, &tol());
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(s.u().max_abs_diff(&real(&[&[h, 0.0], &[-h, 0.0]])) < 1e-12);
        let udv = s.u().adjoint() * s.v();
        assert!(udv.max_abs_diff(&Matrix::real_diag(&[1.0 - h, 0.0])) < 1e-12);
        assert!(validate_proper(&t, s.u(), &tol()).is_ok());
    }

    #[test]
    fn polar_splitting_of_unitary_is_trivial() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let t = Matrix::from_rows(&[
            [C64::new(h, 0.0), C64::new(0.0, h)],
            [C64::new(0.0, h), C64::new(h, 0.0)],
        ])
        .unwrap();
        let s = polar_splitting(&t, &tol());
        assert!(s.v().norm_fro() < 1e-12);
    }

    #[test]
    fn projection_splitting_examples() {
        let t = real(&[&[0.5, 0.0], &[-0.5, 0.0]]);
        let s = projection_splitting(&t, &tol()).unwrap();
        assert!(s.u().max_abs_diff(&real(&[&[1.0, 0.0], &[-1.0, 0.0]])) < 1e-12);
        let qdv = pinv(s.u(), &tol()) * s.v();
        assert!(qdv.max_abs_diff(&Matrix::real_diag(&[0.5, 0.0])) < 1e-12);
        assert!(validate_proper(&t, s.u(), &tol()).is_ok());

        let s = projection_splitting(&Matrix::identity(2), &tol()).unwrap();
        assert!(s.v().norm_fro() < 1e-12);

        let nilpotent = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(projection_splitting(&nilpotent, &tol()), Err(Error::NotAComplement(_))));
    }

    #[test]
    fn product_of_projections_examples() {
        assert!(is_product_of_projections(&real(&[&[0.5, 0.0], &[-0.5, 0.0]]), &tol()));
        assert!(is_product_of_projections(&real(&[&[0.5, 0.5], &[0.5, 0.5]]), &tol()));
        assert!(!is_product_of_projections(&real(&[&[3.0, -1.0], &[0.0, 2.0]]), &tol()));
        // equals P_T P_{T^*} but R(T) = N(T)
        assert!(!is_product_of_projections(&real(&[&[0.0, 1.0], &[0.0, 0.0]]), &tol()));
    }

    #[test]
    fn range_projector_examples() {
        let s = range_projector_splitting(&Matrix::real_diag(&[0.5, 0.0]), &tol()).unwrap();
        assert!(s.u().max_abs_diff(&Matrix::real_diag(&[1.0, 0.0])) < 1e-14);
        assert!(s.v().max_abs_diff(&Matrix::real_diag(&[0.5, 0.0])) < 1e-14);

        let theta: f64 = 0.7;
        let lambda = C64::from_polar(0.9, theta);
        let t = Matrix::diag(&[lambda, C64::new(0.0, 0.0)]);
        let s = range_projector_splitting(&t, &tol()).unwrap();
        assert!(validate_proper(&t, s.u(), &tol()).is_ok());
        let gap = (C64::new(1.0, 0.0) - lambda).norm();
        assert!((s.v().norm_spectral() - gap).abs() < 1e-12);

        let jordan = real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert_eq!(range_projector_splitting(&jordan, &tol()).unwrap_err(), Error::NotNormal);
    }
}
