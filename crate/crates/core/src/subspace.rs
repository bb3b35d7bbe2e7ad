use faer::Mat;

use crate::error::{Error, Result};
use crate::linalg::{self, projector_from_orthonormal, raw_svd};
use crate::matrix::{Matrix, C64};
use crate::tolerances::Tolerances;

/// Subspace of `C^n` held as a full-column-rank basis. The zero subspace has
/// no basis matrix.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Option<Matrix>,
}

impl Subspace {
    /// Span of the columns of `basis`, which must have full column rank.
    pub fn new(basis: Matrix, tol: &Tolerances) -> Result<Self> {
        let rank = linalg::numeric_rank(&basis, tol);
        if rank != basis.cols() {
            return Err(Error::RankDeficientBasis { rank, cols: basis.cols() });
        }
        Ok(Self { ambient_dim: basis.rows(), basis: Some(basis) })
    }

    pub fn trivial(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: None }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Some(Matrix::identity(ambient_dim)) }
    }

    fn from_orthonormal(ambient_dim: usize, q: Mat<C64>) -> Self {
        let basis = (q.ncols() > 0).then(|| Matrix::wrap(q));
        Self { ambient_dim, basis }
    }

    /// `R(A)` with an orthonormal basis.
    pub fn range_of(a: &Matrix, tol: &Tolerances) -> Self {
        Self::from_orthonormal(a.rows(), linalg::range_basis(a.as_ref(), tol))
    }

    /// `N(A)` with an orthonormal basis.
    pub fn null_space_of(a: &Matrix, tol: &Tolerances) -> Self {
        Self::from_orthonormal(a.cols(), linalg::null_basis(a.as_ref(), tol))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.as_ref().map_or(0, Matrix::cols)
    }

    pub fn basis(&self) -> Option<&Matrix> {
        self.basis.as_ref()
    }

    /// Orthonormal basis, `n x dim` (zero columns for the trivial subspace).
    pub(crate) fn orthonormal_basis(&self, tol: &Tolerances) -> Mat<C64> {
        match &self.basis {
            None => Mat::zeros(self.ambient_dim, 0),
            Some(b) => {
                let f = raw_svd(b.as_ref(), tol);
                f.u.as_ref().subcols(0, b.cols()).to_owned()
            }
        }
    }

    /// Orthogonal projector onto the subspace.
    pub fn projector(&self, tol: &Tolerances) -> Matrix {
        Matrix::wrap(projector_from_orthonormal(self.orthonormal_basis(tol).as_ref()))
    }

    /// `R(a) ⊆ self`.
    pub fn contains_range_of(&self, a: &Matrix, tol: &Tolerances) -> bool {
        match &self.basis {
            None => linalg::numeric_rank(a, tol) == 0,
            Some(b) => linalg::range_contained(a, b, tol),
        }
    }

    pub fn same_as(&self, other: &Subspace, tol: &Tolerances) -> bool {
        self.ambient_dim == other.ambient_dim
            && (&self.projector(tol) - &other.projector(tol)).norm_fro() <= tol.subspace_tol()
    }

    /// `self + other`, orthonormalized with the rank rule.
    pub fn sum(&self, other: &Subspace, tol: &Tolerances) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let a = self.orthonormal_basis(tol);
        let b = other.orthonormal_basis(tol);
        let (ka, kb) = (a.ncols(), b.ncols());
        if ka + kb == 0 {
            return Subspace::trivial(self.ambient_dim);
        }
        let joined = Mat::from_fn(self.ambient_dim, ka + kb, |i, j| if j < ka { a[(i, j)] } else { b[(i, j - ka)] });
        Self::from_orthonormal(self.ambient_dim, linalg::range_basis(joined.as_ref(), tol))
    }

    pub fn orthogonal_complement(&self, tol: &Tolerances) -> Subspace {
        match &self.basis {
            None => Subspace::whole(self.ambient_dim),
            Some(b) => Self::from_orthonormal(
                self.ambient_dim,
                linalg::null_basis(b.adjoint().as_ref(), tol),
            ),
        }
    }

    /// `self ∩ other = {0}`, judged by the condition number of the
    /// concatenated orthonormal bases against `cond_max`.
    pub fn meets_trivially(&self, other: &Subspace, tol: &Tolerances) -> bool {
        let (ka, kb) = (self.dim(), other.dim());
        if ka == 0 || kb == 0 {
            return true;
        }
        if ka + kb > self.ambient_dim {
            return false;
        }
        let a = self.orthonormal_basis(tol);
        let b = other.orthonormal_basis(tol);
        let joined = Mat::from_fn(self.ambient_dim, ka + kb, |i, j| if j < ka { a[(i, j)] } else { b[(i, j - ka)] });
        let s = linalg::singular_values(joined.as_ref());
        let smin = s[ka + kb - 1];
        smin > 0.0 && s[0] / smin <= tol.cond_max
    }

    /// `self ∔ other = C^n`.
    pub fn is_complement_of(&self, other: &Subspace, tol: &Tolerances) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() + other.dim() == self.ambient_dim
            && self.meets_trivially(other, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(rows: &[&[f64]]) -> Matrix {
        Matrix::from_real_rows(rows).unwrap()
    }

    #[test]
    fn rejects_rank_deficient_basis() {
        let tol = Tolerances::default();
        let err = Subspace::new(real(&[&[1.0, 2.0], &[2.0, 4.0]]), &tol).unwrap_err();
        assert_eq!(err, Error::RankDeficientBasis { rank: 1, cols: 2 });
    }

    #[test]
    fn range_null_and_complement() {
        let tol = Tolerances::default();
        let t = Matrix::real_diag(&[1.0, 0.0]);
        let r = Subspace::range_of(&t, &tol);
        let n = Subspace::null_space_of(&t, &tol);
        assert_eq!((r.dim(), n.dim()), (1, 1));
        assert!(r.is_complement_of(&n, &tol));
        assert!(n.same_as(&r.orthogonal_complement(&tol), &tol));
        assert!(r.sum(&n, &tol).same_as(&Subspace::whole(2), &tol));
        assert_eq!(Subspace::null_space_of(&Matrix::identity(3), &tol).dim(), 0);
        assert_eq!(Subspace::range_of(&Matrix::zeros(2, 2), &tol).dim(), 0);
    }

    #[test]
    fn containment() {
        let tol = Tolerances::default();
        let m = Subspace::new(real(&[&[1.0], &[1.0]]), &tol).unwrap();
        assert!(m.contains_range_of(&real(&[&[2.0, -1.0], &[2.0, -1.0]]), &tol));
        assert!(!m.contains_range_of(&Matrix::real_diag(&[1.0, 0.0]), &tol));
        assert!(Subspace::trivial(2).contains_range_of(&Matrix::zeros(2, 3), &tol));
    }
}
