use crate::error::{Error, Result};

/// Environment variable that overrides the default relative rank cutoff.
pub const RANK_RTOL_ENV: &str = "PROPER_SPLIT_TOL_RANK";

/// Numerical thresholds shared by every predicate in the crate.
///
/// All values are dimensionless and relative. `rank_rtol = None` selects the
/// shape-dependent default `max(m, n) * f64::EPSILON * 64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub rank_rtol: Option<f64>,
    pub sym_tol: f64,
    pub psd_tol: f64,
    pub cond_max: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { rank_rtol: None, sym_tol: 1e-10, psd_tol: 1e-10, cond_max: 1e12 }
    }
}

impl Tolerances {
    /// Defaults, with `rank_rtol` taken from [`RANK_RTOL_ENV`] when it is set
    /// to a positive number.
    pub fn from_env() -> Result<Self> {
        let mut tol = Self::default();
        if let Ok(raw) = std::env::var(RANK_RTOL_ENV) {
            let value: f64 = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidTolerance(format!("{RANK_RTOL_ENV}={raw:?}")))?;
            tol.rank_rtol = Some(value);
        }
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("rank_rtol", self.rank_rtol.unwrap_or(1.0)),
            ("sym_tol", self.sym_tol),
            ("psd_tol", self.psd_tol),
            ("cond_max", self.cond_max),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidTolerance(format!("{name} must be positive, got {value}")));
            }
        }
        Ok(())
    }

    /// Relative singular-value cutoff for an `m x n` matrix.
    pub fn rank_rtol_for(&self, m: usize, n: usize) -> f64 {
        self.rank_rtol
            .unwrap_or_else(|| m.max(n).max(1) as f64 * f64::EPSILON * 64.0)
    }

    /// Threshold on `||P_A - P_B||_F` for two subspaces to count as equal.
    pub fn subspace_tol(&self) -> f64 {
        1e3 * self.sym_tol
    }

    /// Relative threshold for matrix identities that hold exactly in theory.
    pub fn identity_tol(&self) -> f64 {
        1e3 * self.sym_tol
    }
}
