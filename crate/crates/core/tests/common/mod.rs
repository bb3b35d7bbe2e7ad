#![allow(dead_code)]

use proper_split::generate::{self, Field};
use proper_split::linalg::orth_projector;
use proper_split::{pinv, validate_proper, Matrix, ProperSplitting, Tolerances};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tol() -> Tolerances {
    Tolerances::default()
}

pub fn field<R: Rng>(rng: &mut R) -> Field {
    if rng.random_bool(0.5) {
        Field::Complex
    } else {
        Field::Real
    }
}

/// Random `m x n` with rank drawn from `0..=min(m, n)`.
pub fn any_rank<R: Rng>(rng: &mut R, m: usize, n: usize) -> Matrix {
    let rank = rng.random_range(0..=m.min(n));
    let f = field(rng);
    generate::with_rank(rng, m, n, rank, f)
}

/// Nonzero random `m x n`, rank-deficient about half the time.
pub fn nonzero<R: Rng>(rng: &mut R, m: usize, n: usize) -> Matrix {
    let full = m.min(n);
    let rank = if full > 1 && rng.random_bool(0.5) { rng.random_range(1..full) } else { full };
    let f = field(rng);
    generate::with_rank(rng, m, n, rank, f)
}

/// Splitting with `V = P_T H P_T (T^+)^*` for Hermitian `H`, so that all six
/// Hermitian flags hold.
pub fn hermitian_family<R: Rng>(rng: &mut R, t: &Matrix, scale: f64) -> Option<ProperSplitting> {
    let tol = tol();
    let m = t.rows();
    let g = generate::gaussian(rng, m, m, Field::Complex);
    let h = (&g + &g.adjoint()).scale_real(0.5 * scale);
    let p = orth_projector(t, &tol);
    let v = &(&(&p * &h) * &p) * &pinv(t, &tol).adjoint();
    validate_proper(t, &(t + &v), &tol).ok()
}

pub fn scaled_family(t: &Matrix, beta: f64) -> ProperSplitting {
    validate_proper(t, &t.scale_real(1.0 + beta), &tol()).expect("(1 + beta) T splits T properly")
}
