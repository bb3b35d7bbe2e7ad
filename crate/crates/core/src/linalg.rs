//! SVD-backed dense algebra: pseudoinverse, projectors, polar decomposition,
//! spectra, and Löwner-order predicates.
//!
//! Numeric rank is decided once, by [`Tolerances::rank_rtol_for`]: singular
//! values at or below `rank_rtol * sigma_max` count as zero. Every range and
//! nullspace predicate reduces to a comparison of orthogonal projectors built
//! under that rule.

use faer::{Mat, MatRef, Side};

use crate::error::{Error, Result};
use crate::matrix::{Matrix, C64};
use crate::subspace::Subspace;
use crate::tolerances::Tolerances;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

/// Full singular value decomposition `A = left * diag(singular_values) * right^*`.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    /// `m x m` unitary.
    pub left: Matrix,
    /// Nonincreasing, length `min(m, n)`.
    pub singular_values: Vec<f64>,
    /// `n x n` unitary.
    pub right: Matrix,
    pub numeric_rank: usize,
}

impl SvdFactors {
    /// `left * Sigma * right^*`.
    pub fn recompose(&self) -> Matrix {
        let (m, n) = (self.left.rows(), self.right.rows());
        let sigma = Mat::from_fn(m, n, |i, j| {
            if i == j {
                C64::new(self.singular_values[i], 0.0)
            } else {
                ZERO
            }
        });
        Matrix::wrap(self.left.as_ref() * &sigma * self.right.as_ref().adjoint())
    }
}

pub(crate) struct RawSvd {
    pub u: Mat<C64>,
    pub s: Vec<f64>,
    pub v: Mat<C64>,
    pub rank: usize,
}

pub(crate) fn raw_svd(a: MatRef<'_, C64>, tol: &Tolerances) -> RawSvd {
    let svd = a.svd().expect("SVD failed to converge");
    let k = a.nrows().min(a.ncols());
    let s: Vec<f64> = (0..k).map(|i| svd.S()[i].re).collect();
    let rank = rank_of(&s, tol.rank_rtol_for(a.nrows(), a.ncols()));
    RawSvd { u: svd.U().to_owned(), s, v: svd.V().to_owned(), rank }
}

fn rank_of(s: &[f64], rtol: f64) -> usize {
    match s.first() {
        Some(&smax) if smax > 0.0 => s.iter().take_while(|&&x| x > rtol * smax).count(),
        _ => 0,
    }
}

pub(crate) fn singular_values(a: MatRef<'_, C64>) -> Vec<f64> {
    a.singular_values().expect("SVD failed to converge")
}

/// Orthonormal basis of `R(A)`, `m x r` (possibly zero columns).
pub(crate) fn range_basis(a: MatRef<'_, C64>, tol: &Tolerances) -> Mat<C64> {
    let f = raw_svd(a, tol);
    f.u.as_ref().subcols(0, f.rank).to_owned()
}

/// Orthonormal basis of `N(A)`, `n x (n - r)` (possibly zero columns).
pub(crate) fn null_basis(a: MatRef<'_, C64>, tol: &Tolerances) -> Mat<C64> {
    let f = raw_svd(a, tol);
    let n = a.ncols();
    f.v.as_ref().subcols(f.rank, n - f.rank).to_owned()
}

/// `Q Q^*` for a basis with orthonormal columns; `n x n` zero when `q` is empty.
pub(crate) fn projector_from_orthonormal(q: MatRef<'_, C64>) -> Mat<C64> {
    if q.ncols() == 0 {
        Mat::zeros(q.nrows(), q.nrows())
    } else {
        q * q.adjoint()
    }
}

pub fn svd(a: &Matrix, tol: &Tolerances) -> SvdFactors {
    let f = raw_svd(a.as_ref(), tol);
    SvdFactors {
        left: Matrix::wrap(f.u),
        singular_values: f.s,
        right: Matrix::wrap(f.v),
        numeric_rank: f.rank,
    }
}

pub fn numeric_rank(a: &Matrix, tol: &Tolerances) -> usize {
    rank_of(&singular_values(a.as_ref()), tol.rank_rtol_for(a.rows(), a.cols()))
}

/// Moore-Penrose inverse `V_r Sigma_r^{-1} U_r^*`.
pub fn pinv(a: &Matrix, tol: &Tolerances) -> Matrix {
    Matrix::wrap(pinv_raw(a.as_ref(), tol))
}

pub(crate) fn pinv_raw(a: MatRef<'_, C64>, tol: &Tolerances) -> Mat<C64> {
    let f = raw_svd(a, tol);
    let r = f.rank;
    let ur = f.u.as_ref().subcols(0, r);
    let vr = f.v.as_ref().subcols(0, r);
    let scaled = Mat::from_fn(vr.nrows(), r, |i, j| vr[(i, j)] / f.s[j]);
    if r == 0 {
        Mat::zeros(a.ncols(), a.nrows())
    } else {
        &scaled * ur.adjoint()
    }
}

/// Polar factors `T = U_T |T|` with `R(U_T) = R(T)`.
#[derive(Debug, Clone)]
pub struct PolarDecomposition {
    pub partial_isometry: Matrix,
    /// `(T^* T)^{1/2}`.
    pub modulus: Matrix,
}

pub fn polar_decompose(t: &Matrix, tol: &Tolerances) -> PolarDecomposition {
    let f = raw_svd(t.as_ref(), tol);
    let (m, n) = t.shape();
    let r = f.rank;
    let ur = f.u.as_ref().subcols(0, r);
    let vr = f.v.as_ref().subcols(0, r);
    if r == 0 {
        return PolarDecomposition {
            partial_isometry: Matrix::zeros(m, n),
            modulus: Matrix::zeros(n, n),
        };
    }
    let scaled = Mat::from_fn(n, r, |i, j| vr[(i, j)] * f.s[j]);
    PolarDecomposition {
        partial_isometry: Matrix::wrap(ur * vr.adjoint()),
        modulus: Matrix::wrap(&scaled * vr.adjoint()),
    }
}

/// Orthogonal projector onto `R(A)`.
pub fn orth_projector(a: &Matrix, tol: &Tolerances) -> Matrix {
    Matrix::wrap(projector_from_orthonormal(range_basis(a.as_ref(), tol).as_ref()))
}

/// Projector with range `range` and nullspace `null`, i.e. `Q_{range // null}`.
///
/// The two subspaces must be complementary; the check uses the condition
/// number of their concatenated orthonormal bases against `cond_max`.
pub fn oblique_projector(range: &Subspace, null: &Subspace, tol: &Tolerances) -> Result<Matrix> {
    let n = range.ambient_dim();
    if null.ambient_dim() != n {
        return Err(Error::ShapeMismatch(format!(
            "subspaces live in C^{n} and C^{}",
            null.ambient_dim()
        )));
    }
    let (k_range, k_null) = (range.dim(), null.dim());
    if k_range + k_null != n {
        return Err(Error::NotAComplement(format!(
            "dimensions {k_range} + {k_null} do not add up to {n}"
        )));
    }
    if k_null == 0 {
        return Ok(Matrix::identity(n));
    }
    if k_range == 0 {
        return Ok(Matrix::zeros(n, n));
    }
    let qr = range.orthonormal_basis(tol);
    let qn = null.orthonormal_basis(tol);
    let joined = Mat::from_fn(n, n, |i, j| if j < k_range { qr[(i, j)] } else { qn[(i, j - k_range)] });
    let f = raw_svd(joined.as_ref(), tol);
    let cond = f.s[0] / f.s[n - 1];
    if cond.is_nan() || cond > tol.cond_max {
        return Err(Error::NotAComplement(format!(
            "concatenated basis has condition number {cond:.3e} > {:.3e}",
            tol.cond_max
        )));
    }
    // joined^{-1} = V Sigma^{-1} U^*
    let scaled = Mat::from_fn(n, n, |i, j| f.v[(i, j)] / f.s[j]);
    let inverse = &scaled * f.u.adjoint();
    let head = Mat::from_fn(n, n, |i, j| if j < k_range { qr[(i, j)] } else { ZERO });
    Ok(Matrix::wrap(&head * &inverse))
}

/// Eigenvalues with algebraic multiplicity, in no particular order.
pub fn spectrum(a: &Matrix) -> Result<Vec<C64>> {
    a.check_square()?;
    Ok(a.as_mat().eigenvalues().expect("eigenvalue iteration failed to converge"))
}

pub fn spectral_radius(a: &Matrix) -> Result<f64> {
    Ok(spectrum(a)?.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Multiset equality of two spectra up to `abs_tol`, by greedy nearest matching.
pub fn spectra_match(a: &[C64], b: &[C64], abs_tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|z| {
        let nearest = b
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, w)| (k, (z - w).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1));
        match nearest {
            Some((k, d)) if d <= abs_tol => {
                used[k] = true;
                true
            }
            _ => false,
        }
    })
}

/// `||A - A^*||_F <= sym_tol * (1 + ||A||_F)`. Non-square matrices are never Hermitian.
pub fn is_hermitian(a: &Matrix, tol: &Tolerances) -> bool {
    a.is_square() && (a - &a.adjoint()).norm_fro() <= tol.sym_tol * (1.0 + a.norm_fro())
}

/// Eigenvalues (nondecreasing) of the Hermitian part `(A + A^*) / 2`.
pub fn hermitian_eigenvalues(a: &Matrix) -> Result<Vec<f64>> {
    a.check_square()?;
    let h = (a + &a.adjoint()).scale_real(0.5);
    Ok(h.as_mat()
        .self_adjoint_eigenvalues(Side::Lower)
        .expect("Hermitian eigenvalue iteration failed to converge"))
}

/// Hermitian with `lambda_min >= -psd_tol * (1 + ||A||_F)`.
pub fn is_psd(a: &Matrix, tol: &Tolerances) -> bool {
    if !is_hermitian(a, tol) {
        return false;
    }
    let lmin = hermitian_eigenvalues(a).expect("square")[0];
    lmin >= -tol.psd_tol * (1.0 + a.norm_fro())
}

/// `||A A^* - A^* A||_F <= sym_tol * ||A||_F^2`.
pub fn is_normal(a: &Matrix, tol: &Tolerances) -> bool {
    if !a.is_square() {
        return false;
    }
    let h = a.adjoint();
    let commutator = (a * &h) - (&h * a);
    let scale = a.norm_fro();
    commutator.norm_fro() <= tol.sym_tol * scale * scale
}

/// Löwner order `a <= b`, i.e. `b - a` positive semidefinite.
pub fn loewner_leq(a: &Matrix, b: &Matrix, tol: &Tolerances) -> Result<bool> {
    a.check_square()?;
    a.check_same_shape(b, "Löwner comparison")?;
    if !is_hermitian(a, tol) || !is_hermitian(b, tol) {
        return Err(Error::NotHermitian);
    }
    let diff = b - a;
    let lmin = hermitian_eigenvalues(&diff)?[0];
    Ok(lmin >= -tol.psd_tol * (1.0 + diff.norm_fro()))
}

/// `R(a) = R(b)`, compared through orthogonal projectors.
pub fn ranges_equal(a: &Matrix, b: &Matrix, tol: &Tolerances) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    let pa = orth_projector(a, tol);
    let pb = orth_projector(b, tol);
    (&pa - &pb).norm_fro() <= tol.subspace_tol()
}

/// `R(a) ⊆ R(b)`: `||(I - P_b) Q_a||_F` small for an orthonormal basis `Q_a` of `R(a)`.
pub fn range_contained(a: &Matrix, b: &Matrix, tol: &Tolerances) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    let qa = range_basis(a.as_ref(), tol);
    if qa.ncols() == 0 {
        return true;
    }
    let qb = range_basis(b.as_ref(), tol);
    let residual = if qb.ncols() == 0 {
        qa.clone()
    } else {
        &qa - &qb * (qb.adjoint() * &qa)
    };
    residual.norm_l2() <= tol.subspace_tol()
}

/// `||a - b||_F <= rel * (1 + max(||a||_F, ||b||_F))`.
pub fn approx_eq(a: &Matrix, b: &Matrix, rel: f64) -> bool {
    a.shape() == b.shape() && (a - b).norm_fro() <= rel * (1.0 + a.norm_fro().max(b.norm_fro()))
}

/// `sigma_max / sigma_min` of a square matrix (infinite when singular).
pub fn condition_number(a: &Matrix) -> Result<f64> {
    a.check_square()?;
    let s = singular_values(a.as_ref());
    let smin = *s.last().expect("non-empty");
    Ok(if smin == 0.0 { f64::INFINITY } else { s[0] / smin })
}

/// Inverse of a square matrix whose condition number is at most `cond_max`;
/// `None` otherwise.
pub(crate) fn checked_inverse(a: &Matrix, tol: &Tolerances) -> Option<Matrix> {
    let f = raw_svd(a.as_ref(), tol);
    let n = a.rows();
    let smin = f.s[n - 1];
    if smin == 0.0 || f.s[0] / smin > tol.cond_max {
        return None;
    }
    let scaled = Mat::from_fn(n, n, |i, j| f.v[(i, j)] / f.s[j]);
    Some(Matrix::wrap(&scaled * f.u.adjoint()))
}

/// Both sides of the reverse-order law for the Moore-Penrose inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrevilleCheck {
    /// `(T1 T2)^+ = T2^+ T1^+`.
    pub law_holds: bool,
    /// `R(T1^* T1 T2) ⊆ R(T2)` and `R(T2 T2^* T1^*) ⊆ R(T1^*)`.
    pub inclusions_hold: bool,
}

pub fn check_greville(t1: &Matrix, t2: &Matrix, tol: &Tolerances) -> Result<GrevilleCheck> {
    if t1.cols() != t2.rows() {
        return Err(Error::ShapeMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            t1.rows(),
            t1.cols(),
            t2.rows(),
            t2.cols()
        )));
    }
    let product = t1 * t2;
    let lhs = pinv(&product, tol);
    let rhs = pinv(t2, tol) * pinv(t1, tol);
    let law_holds = approx_eq(&lhs, &rhs, tol.identity_tol());

    let t1h = t1.adjoint();
    let first = range_contained(&(&t1h * &product), t2, tol);
    let second = range_contained(&(t2 * &(t2.adjoint() * &t1h)), &t1h, tol);
    Ok(GrevilleCheck { law_holds, inclusions_hold: first && second })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn real(rows: &[&[f64]]) -> Matrix {
        Matrix::from_real_rows(rows).unwrap()
    }

    fn worked_t() -> Matrix {
        real(&[&[0.5, 0.0], &[-0.5, 0.0]])
    }

    fn penrose_residuals(a: &Matrix, x: &Matrix) -> [f64; 4] {
        [
            (&(a * x) * a - a).norm_fro(),
            (&(x * a) * x - x).norm_fro(),
            ((x * a) - (x * a).adjoint()).norm_fro(),
            ((a * x) - (a * x).adjoint()).norm_fro(),
        ]
    }

    #[test]
    fn pinv_of_diagonal_and_column() {
        let p = pinv(&Matrix::real_diag(&[2.0, 0.0]), &tol());
        assert!(p.max_abs_diff(&Matrix::real_diag(&[0.5, 0.0])) < 1e-15);

        let col = real(&[&[1.0], &[1.0]]);
        let p = pinv(&col, &tol());
        assert_eq!(p.shape(), (1, 2));
        assert!(p.max_abs_diff(&real(&[&[0.5, 0.5]])) < 1e-15);
    }

    #[test]
    fn pinv_of_zero_is_zero_transpose_shape() {
        let p = pinv(&Matrix::zeros(2, 3), &tol());
        assert_eq!(p.shape(), (3, 2));
        assert_eq!(p.norm_fro(), 0.0);
    }

    #[test]
    fn pinv_satisfies_penrose_equations_on_fixed_rectangle() {
        let a = real(&[&[1.0, 2.0, 0.5], &[0.0, 1.0, -1.0], &[3.0, -1.0, 2.0], &[1.0, 1.0, 1.0], &[0.0, 2.0, 4.0]]);
        let x = pinv(&a, &tol());
        for r in penrose_residuals(&a, &x) {
            assert!(r <= 1e-10 * (1.0 + a.norm_fro()), "residual {r}");
        }
    }

    #[test]
    fn svd_examples() {
        let f = svd(&Matrix::identity(3), &tol());
        assert_eq!(f.numeric_rank, 3);
        assert!(f.singular_values.iter().all(|&s| (s - 1.0).abs() < 1e-15));

        let f = svd(&worked_t(), &tol());
        assert_eq!(f.numeric_rank, 1);
        assert!((f.singular_values[0] - 2f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(f.singular_values[1].abs() < 1e-15);
        assert!(f.recompose().max_abs_diff(&worked_t()) < 1e-15);

        assert_eq!(svd(&Matrix::zeros(2, 2), &tol()).numeric_rank, 0);
    }

    #[test]
    fn polar_of_worked_example() {
        let p = polar_decompose(&worked_t(), &tol());
        let h = 2f64.sqrt() / 2.0;
        assert!(p.partial_isometry.max_abs_diff(&real(&[&[h, 0.0], &[-h, 0.0]])) < 1e-15);
        assert!(p.modulus.max_abs_diff(&Matrix::real_diag(&[h, 0.0])) < 1e-15);

        let id = polar_decompose(&Matrix::identity(2), &tol());
        assert!(id.partial_isometry.max_abs_diff(&Matrix::identity(2)) < 1e-15);
        assert!(id.modulus.max_abs_diff(&Matrix::identity(2)) < 1e-15);
    }

    #[test]
    fn projector_examples() {
        let p = orth_projector(&Matrix::real_diag(&[3.0, 0.0]), &tol());
        assert!(p.max_abs_diff(&Matrix::real_diag(&[1.0, 0.0])) < 1e-15);
        let p = orth_projector(&worked_t(), &tol());
        assert!(p.max_abs_diff(&real(&[&[0.5, -0.5], &[-0.5, 0.5]])) < 1e-15);
        let p = orth_projector(&real(&[&[2.0, 1.0], &[1.0, 3.0]]), &tol());
        assert!(p.max_abs_diff(&Matrix::identity(2)) < 1e-14);
    }

    #[test]
    fn oblique_projector_examples() {
        let t = tol();
        let m = Subspace::new(real(&[&[1.0], &[1.0]]), &t).unwrap();
        let n = Subspace::new(real(&[&[0.0], &[1.0]]), &t).unwrap();
        let q = oblique_projector(&m, &n, &t).unwrap();
        assert!(q.max_abs_diff(&real(&[&[1.0, 0.0], &[1.0, 0.0]])) < 1e-14);

        let m = Subspace::new(real(&[&[1.0], &[-1.0]]), &t).unwrap();
        let q = oblique_projector(&m, &n, &t).unwrap();
        assert!(q.max_abs_diff(&real(&[&[1.0, 0.0], &[-1.0, 0.0]])) < 1e-14);

        let perp = Subspace::new(real(&[&[1.0], &[1.0]]), &t).unwrap();
        let q = oblique_projector(&m, &perp, &t).unwrap();
        assert!(q.max_abs_diff(&orth_projector(m.basis().unwrap(), &t)) < 1e-14);
    }

    #[test]
    fn oblique_projector_rejects_non_complements() {
        let t = tol();
        let e1 = Subspace::new(real(&[&[1.0], &[0.0]]), &t).unwrap();
        assert!(matches!(oblique_projector(&e1, &e1, &t), Err(Error::NotAComplement(_))));
        let whole = Subspace::whole(2);
        assert!(matches!(oblique_projector(&e1, &whole, &t), Err(Error::NotAComplement(_))));
        let nearly = Subspace::new(real(&[&[1.0], &[1e-14]]), &t).unwrap();
        assert!(matches!(oblique_projector(&e1, &nearly, &t), Err(Error::NotAComplement(_))));
    }

    #[test]
    fn spectrum_examples() {
        let mut s = spectrum(&Matrix::real_diag(&[3.0, -1.0])).unwrap();
        s.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((s[0] - C64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((s[1] - C64::new(3.0, 0.0)).norm() < 1e-15);

        // roots of x^2 + x/2 - 1/2
        let a = real(&[&[0.0, 1.0], &[0.5, -0.5]]);
        let mut s = spectrum(&a).unwrap();
        s.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((s[0] - C64::new(-1.0, 0.0)).norm() < 1e-14);
        assert!((s[1] - C64::new(0.5, 0.0)).norm() < 1e-14);
        assert!((spectral_radius(&a).unwrap() - 1.0).abs() < 1e-14);

        let s = spectrum(&real(&[&[0.0, 1.0], &[0.0, 0.0]])).unwrap();
        assert!(s.iter().all(|z| z.norm() < 1e-15));
        assert!(matches!(spectrum(&Matrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn spectral_radius_examples() {
        let r = spectral_radius(&real(&[&[0.0, 0.0], &[-0.5, 0.0]])).unwrap();
        assert_eq!(r, 0.0);
        let d = (2.0 - 2f64.sqrt()) / 2.0;
        let r = spectral_radius(&Matrix::real_diag(&[d, 0.0])).unwrap();
        assert!((r - d).abs() < 1e-15);
    }

    #[test]
    fn loewner_examples() {
        let t = tol();
        let a = Matrix::real_diag(&[1.0, 0.0]);
        assert!(loewner_leq(&a, &Matrix::real_diag(&[2.0, 1.0]), &t).unwrap());
        let b = Matrix::real_diag(&[0.0, 1.0]);
        assert!(!loewner_leq(&a, &b, &t).unwrap());
        assert!(!loewner_leq(&b, &a, &t).unwrap());

        let b = Matrix::real_diag(&[2.0, 0.0]);
        assert!(loewner_leq(&a, &b, &t).unwrap());
        assert!(loewner_leq(&pinv(&b, &t), &pinv(&a, &t), &t).unwrap());

        let skew = real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(loewner_leq(&skew, &a, &t), Err(Error::NotHermitian));
    }

    #[test]
    fn ranges_equal_examples() {
        let t = tol();
        let tm = real(&[&[1.0, 0.0], &[1.0, 2.0]]);
        let u = real(&[&[1.0, 0.0], &[0.0, 2.0]]);
        assert!(ranges_equal(&tm, &u, &t));
        assert!(!ranges_equal(&Matrix::real_diag(&[1.0, 0.0]), &Matrix::real_diag(&[0.0, 1.0]), &t));
        let a = real(&[&[1.0, 2.0], &[2.0, 4.0], &[0.0, 0.0]]);
        let g = real(&[&[2.0, 1.0], &[1.0, 1.0]]);
        assert!(ranges_equal(&a, &(&a * &g), &t));
    }

    #[test]
    fn greville_examples() {
        let t = tol();
        let s = 0.5f64.sqrt();
        let unitary = real(&[&[s, s], &[-s, s]]);
        let arbitrary = real(&[&[1.0, 2.0], &[2.0, 4.0]]);
        let g = check_greville(&unitary, &arbitrary, &t).unwrap();
        assert_eq!(g, GrevilleCheck { law_holds: true, inclusions_hold: true });

        let g = check_greville(&Matrix::real_diag(&[1.0, 0.0]), &real(&[&[0.0, 0.0], &[1.0, 0.0]]), &t).unwrap();
        // product is zero: (T1 T2)^+ = 0 = T2^+ T1^+ since T1^+ = e1 e1^*, T2^+ = e1 e2^*
        assert_eq!(g.law_holds, g.inclusions_hold);
        assert!(g.law_holds);

        let t1 = real(&[&[1.0, 1.0], &[0.0, 0.0]]);
        let t2 = real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let g = check_greville(&t1, &t2, &t).unwrap();
        assert_eq!(g, GrevilleCheck { law_holds: false, inclusions_hold: false });
    }

    #[test]
    fn hermitian_psd_normal_predicates() {
        let t = tol();
        let h = Matrix::from_rows(&[[C64::new(2.0, 0.0), C64::new(0.0, 1.0)], [C64::new(0.0, -1.0), C64::new(2.0, 0.0)]]).unwrap();
        assert!(is_hermitian(&h, &t) && is_psd(&h, &t) && is_normal(&h, &t));
        let jordan = real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert!(!is_hermitian(&jordan, &t) && !is_normal(&jordan, &t));
        assert!(!is_psd(&Matrix::real_diag(&[1.0, -1e-3]), &t));
        assert!(is_psd(&Matrix::real_diag(&[1.0, -1e-13]), &t));
    }
}
