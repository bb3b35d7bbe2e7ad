//! Seeded random instances: matrices of prescribed rank, complements, PSD
//! matrices, proper splittings, and right-hand sides.

use faer::Mat;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{orth_projector, raw_svd};
use crate::matrix::{Matrix, C64};
use crate::splitting::{validate_proper, ProperSplitting};
use crate::subspace::Subspace;
use crate::tolerances::Tolerances;

/// Field of the generated entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

fn entry<R: Rng + ?Sized>(rng: &mut R, field: Field) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    match field {
        Field::Real => C64::new(re, 0.0),
        Field::Complex => C64::new(re, rng.sample(StandardNormal)) * std::f64::consts::FRAC_1_SQRT_2,
    }
}

/// Entries i.i.d. standard normal (unit variance in the complex case).
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, field: Field) -> Matrix {
    Matrix::wrap(Mat::from_fn(rows, cols, |_, _| entry(rng, field)))
}

fn gaussian_mat<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, field: Field) -> Mat<C64> {
    Mat::from_fn(rows, cols, |_, _| entry(rng, field))
}

/// Haar-like unitary (orthogonal for `Field::Real`) from the SVD of a Gaussian.
pub fn unitary<R: Rng + ?Sized>(rng: &mut R, n: usize, field: Field) -> Matrix {
    let g = gaussian_mat(rng, n, n, field);
    Matrix::wrap(raw_svd(g.as_ref(), &Tolerances::default()).u)
}

/// `m x n` matrix of exact rank `rank` with nonzero singular values in `[0.5, 2]`.
pub fn with_rank<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, rank: usize, field: Field) -> Matrix {
    assert!(rank <= m.min(n), "rank {rank} exceeds min({m}, {n})");
    let left = unitary(rng, m, field);
    let right = unitary(rng, n, field);
    let sigma: Vec<f64> = (0..rank).map(|_| rng.random_range(0.5..=2.0)).collect();
    let scaled = Mat::from_fn(m, rank, |i, j| left.get(i, j) * sigma[j]);
    let rv = right.as_ref().subcols(0, rank);
    Matrix::wrap(&scaled * rv.adjoint())
}

/// Positive semidefinite `n x n` of rank `rank`.
pub fn psd<R: Rng + ?Sized>(rng: &mut R, n: usize, rank: usize, field: Field) -> Matrix {
    let a = with_rank(rng, n, rank.max(1), rank, field);
    if rank == 0 {
        return Matrix::zeros(n, n);
    }
    &a * &a.adjoint()
}

/// Random complement of `N(T)`: the span of `B + N K`, where `B` spans
/// `R(T^*)`, `N` spans `N(T)`, and `K` is Gaussian.
pub fn complement_of_null<R: Rng + ?Sized>(rng: &mut R, t: &Matrix, field: Field, tol: &Tolerances) -> Subspace {
    let row_space = Subspace::range_of(&t.adjoint(), tol);
    let null = Subspace::null_space_of(t, tol);
    let (Some(b), Some(nb)) = (row_space.basis(), null.basis()) else {
        return row_space;
    };
    let k = gaussian(rng, nb.cols(), b.cols(), field);
    let basis = b + &(nb * &k);
    Subspace::new(basis, tol).expect("B + N K has full column rank")
}

/// `U = T + P_T K T H P_{T^*}` with Gaussian `K` and `H` scaled by
/// `strength`, redrawn until the ranges check out.
pub fn proper_splitting<R: Rng + ?Sized>(
    rng: &mut R,
    t: &Matrix,
    strength: f64,
    field: Field,
    tol: &Tolerances,
) -> ProperSplitting {
    let (m, n) = t.shape();
    let p_range = orth_projector(t, tol);
    let p_row = orth_projector(&t.adjoint(), tol);
    loop {
        let k = gaussian(rng, m, m, field).scale_real(strength);
        let h = Matrix::identity(n) + gaussian(rng, n, n, field).scale_real(strength);
        let u = t + &(&(&(&p_range * &k) * t) * &(&h * &p_row));
        if let Ok(s) = validate_proper(t, &u, tol) {
            return s;
        }
    }
}

/// `W = T G` for Gaussian `G` with `cols` columns, so that `R(W) ⊆ R(T)`.
pub fn solvable_rhs<R: Rng + ?Sized>(rng: &mut R, t: &Matrix, cols: usize, field: Field) -> Matrix {
    t * &gaussian(rng, t.cols(), cols, field)
}

/// Square `W = T G P_{T^*}`, so that `R(W) ⊆ R(T)` and `N(T) ⊆ N(W)`.
pub fn compatible_rhs<R: Rng + ?Sized>(rng: &mut R, t: &Matrix, field: Field, tol: &Tolerances) -> Matrix {
    let n = t.cols();
    &(t * &gaussian(rng, n, n, field)) * &orth_projector(&t.adjoint(), tol)
}
