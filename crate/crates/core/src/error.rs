use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which defining condition of a proper splitting failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProperFailure {
    /// `R(U) != R(T)`.
    Range,
    /// `N(U) != N(T)`.
    Nullspace,
    /// Both range and nullspace differ.
    RangeAndNullspace,
}

impl std::fmt::Display for ProperFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProperFailure::Range => "R(U) differs from R(T)",
            ProperFailure::Nullspace => "N(U) differs from N(T)",
            ProperFailure::RangeAndNullspace => "R(U) differs from R(T) and N(U) differs from N(T)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("matrix is not normal")]
    NotNormal,
    #[error("basis has numeric rank {rank} but {cols} columns")]
    RankDeficientBasis { rank: usize, cols: usize },
    #[error("subspaces are not complementary: {0}")]
    NotAComplement(String),
    #[error("equation is not solvable: R(W) is not contained in R(T)")]
    NotSolvable,
    #[error("not a proper splitting: {0}")]
    NotProper(ProperFailure),
    #[error("I - U^+ V is numerically singular")]
    SingularIteration,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("splittings are of different matrices")]
    MismatchedT,
    #[error("invalid tolerances: {0}")]
    InvalidTolerance(String),
}
