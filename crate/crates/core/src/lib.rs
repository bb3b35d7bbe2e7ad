//! Proper splittings `T = U - V` of dense complex matrices and the stationary
//! iteration `X <- Y_M X + Z_M` that converges to the reduced solution of
//! `TX = W` for a chosen complement `M` of `N(T)`.

pub mod convergence;
pub mod error;
pub mod generate;
pub mod linalg;
pub mod matrix;
pub mod reduced;
pub mod solver;
pub mod splitting;
pub mod subspace;
pub mod tolerances;

pub use convergence::{
    compare_by_u, compare_by_u_above_projector, compare_by_v, convergence_report, hermitian_solution_bound,
    structured_comparisons, ComparisonVerdict, ConvergenceReport, Verdict,
};
pub use error::{Error, ProperFailure, Result};
pub use linalg::{
    check_greville, loewner_leq, oblique_projector, orth_projector, pinv, polar_decompose,
    ranges_equal, spectral_radius, spectrum, svd, GrevilleCheck, PolarDecomposition, SvdFactors,
};
pub use matrix::{Matrix, C64};
pub use reduced::{
    check_solvable, classify_reduced, existence_flags, null_space_matches, reduced_matrix, reduced_solution, spectrum_of_reduced, ExistenceFlags,
    MatrixEquation, ReducedSolutionReport,
};
pub use solver::{
    build_iteration, pinv_via_splitting, solve_iterative, solve_two_sided, IterationConfig, SolveError,
    SolveReport,
};
pub use splitting::{
    diagnostics, is_product_of_projections, polar_splitting, projection_splitting, range_projector_splitting,
    validate_proper, ProperSplitting, SplittingDiagnostics,
};
pub use subspace::Subspace;
pub use tolerances::Tolerances;
