//! Solvability and reduced solutions of `TX = W`.
//!
//! When `R(W) ⊆ R(T)`, every complement `M` of `N(T)` selects exactly one
//! solution with range inside `M`, namely `X_M = Q_{M//N(T)} T^+ W`. Taking
//! `M = R(T^*)` gives the minimum-norm solution `T^+ W`.

use crate::error::{Error, Result};
use crate::linalg::{self, is_hermitian, is_normal, is_psd, numeric_rank, pinv};
use crate::matrix::{Matrix, C64};
use crate::subspace::Subspace;
use crate::tolerances::Tolerances;

/// `TX = W` with `T` of size `m x n` and `W` of size `m x r`.
#[derive(Debug, Clone)]
pub struct MatrixEquation {
    t: Matrix,
    w: Matrix,
}

impl MatrixEquation {
    pub fn new(t: Matrix, w: Matrix) -> Result<Self> {
        if t.rows() != w.rows() {
            return Err(Error::ShapeMismatch(format!(
                "T has {} rows but W has {}",
                t.rows(),
                w.rows()
            )));
        }
        Ok(Self { t, w })
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn w(&self) -> &Matrix {
        &self.w
    }

    /// Number of unknown rows, `n`.
    pub fn unknowns(&self) -> usize {
        self.t.cols()
    }

    /// True when the unknown `X` is square (`n = r`).
    pub fn square_unknown(&self) -> bool {
        self.t.cols() == self.w.cols()
    }
}

#[derive(Debug, Clone)]
pub struct ReducedSolutionReport {
    pub x: Matrix,
    pub subspace: Subspace,
    /// `||T X - W||_F`.
    pub residual: f64,
    pub is_hermitian: bool,
    pub is_psd: bool,
    /// Present only when `X` is square.
    pub spectrum: Option<Vec<C64>>,
}

/// `R(W) ⊆ R(T)`.
pub fn check_solvable(eq: &MatrixEquation, tol: &Tolerances) -> bool {
    linalg::range_contained(&eq.w, &eq.t, tol)
}

/// `Q_{M//N(T)}` after checking that `m` lives in the right space and
/// complements `N(T)`.
pub(crate) fn projector_along_null(t: &Matrix, m: &Subspace, tol: &Tolerances) -> Result<Matrix> {
    if m.ambient_dim() != t.cols() {
        return Err(Error::ShapeMismatch(format!(
            "subspace lives in C^{} but T has {} columns",
            m.ambient_dim(),
            t.cols()
        )));
    }
    let null = Subspace::null_space_of(t, tol);
    linalg::oblique_projector(m, &null, tol)
}

/// `X_M` without the report; errors as [`reduced_solution`].
pub fn reduced_matrix(eq: &MatrixEquation, m: &Subspace, tol: &Tolerances) -> Result<Matrix> {
    if !check_solvable(eq, tol) {
        return Err(Error::NotSolvable);
    }
    let q = projector_along_null(&eq.t, m, tol)?;
    Ok(&q * &(pinv(&eq.t, tol) * &eq.w))
}

pub fn reduced_solution(eq: &MatrixEquation, m: &Subspace, tol: &Tolerances) -> Result<ReducedSolutionReport> {
    let x = reduced_matrix(eq, m, tol)?;
    let residual = (&eq.t * &x - &eq.w).norm_fro();
    let spectrum = if x.is_square() { Some(linalg::spectrum(&x)?) } else { None };
    Ok(ReducedSolutionReport {
        is_hermitian: is_hermitian(&x, tol),
        is_psd: is_psd(&x, tol),
        x,
        subspace: m.clone(),
        residual,
        spectrum,
    })
}

/// Existence of Hermitian and positive semidefinite (reduced) solutions.
///
/// The Hermitian and PSD questions only make sense for a square unknown;
/// when `n != r` those flags are all `false`.
#[derive(Debug, Clone)]
pub struct ExistenceFlags {
    pub solvable: bool,
    pub hermitian_solution_exists: bool,
    pub psd_solution_exists: bool,
    pub hermitian_reduced_exists: bool,
    pub psd_reduced_exists: bool,
    /// `R(W^*) + (R(W^*) + N(T))^⊥`, present when a Hermitian reduced solution exists.
    pub witness_subspace: Option<Subspace>,
}

pub fn existence_flags(eq: &MatrixEquation, tol: &Tolerances) -> ExistenceFlags {
    let solvable = check_solvable(eq, tol);
    let mut flags = ExistenceFlags {
        solvable,
        hermitian_solution_exists: false,
        psd_solution_exists: false,
        hermitian_reduced_exists: false,
        psd_reduced_exists: false,
        witness_subspace: None,
    };
    if !eq.square_unknown() {
        return flags;
    }
    let tw = &eq.t * &eq.w.adjoint();
    let tw_hermitian = is_hermitian(&tw, tol);
    let tw_psd_rank = is_psd(&tw, tol) && numeric_rank(&tw, tol) == numeric_rank(&eq.w, tol);

    let row_space = Subspace::range_of(&eq.w.adjoint(), tol);
    let null = Subspace::null_space_of(&eq.t, tol);
    let independent = row_space.meets_trivially(&null, tol);

    flags.hermitian_solution_exists = solvable && tw_hermitian;
    flags.psd_solution_exists = tw_psd_rank;
    flags.hermitian_reduced_exists = solvable && tw_hermitian && independent;
    flags.psd_reduced_exists = solvable && tw_psd_rank && independent;
    if flags.hermitian_reduced_exists {
        let correction = row_space.sum(&null, tol).orthogonal_complement(tol);
        flags.witness_subspace = Some(row_space.sum(&correction, tol));
    }
    flags
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedClassification {
    pub hermitian: bool,
    pub normal: bool,
    pub psd: bool,
    /// `R(W^*) ⊆ M`.
    pub inclusion: bool,
}

/// Classifies a reduced solution `x` for `m`. When `TW^*` is Hermitian the
/// first two flags agree with `inclusion`; when additionally `TW^*` is PSD
/// with `r(TW^*) = r(W)`, so does `psd`.
pub fn classify_reduced(x: &Matrix, eq: &MatrixEquation, m: &Subspace, tol: &Tolerances) -> ReducedClassification {
    ReducedClassification {
        hermitian: is_hermitian(x, tol),
        normal: is_normal(x, tol),
        psd: is_psd(x, tol),
        inclusion: m.contains_range_of(&eq.w.adjoint(), tol),
    }
}

/// `σ(X_M)`, which coincides with `σ(T^+ W)` whenever `N(T) ⊆ N(W)`.
pub fn spectrum_of_reduced(eq: &MatrixEquation, m: &Subspace, tol: &Tolerances) -> Result<Vec<C64>> {
    if !eq.square_unknown() {
        return Err(Error::NotSquare { rows: eq.t.cols(), cols: eq.w.cols() });
    }
    linalg::spectrum(&reduced_matrix(eq, m, tol)?)
}

/// `N(X) = N(W)`, judged as `r(X) = r(W)` together with `X N_W = 0` for an
/// orthonormal basis `N_W` of `N(W)`.
pub fn null_space_matches(x: &Matrix, w: &Matrix, tol: &Tolerances) -> bool {
    if x.cols() != w.cols() || numeric_rank(x, tol) != numeric_rank(w, tol) {
        return false;
    }
    match Subspace::null_space_of(w, tol).basis() {
        None => true,
        Some(nw) => (x * nw).norm_fro() <= tol.identity_tol() * (1.0 + x.norm_fro()),
    }
}
