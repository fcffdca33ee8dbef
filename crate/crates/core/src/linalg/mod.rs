//! Dense complex linear-algebra kernels.
//!
//! Everything here is built on two Jacobi iterations: a cyclic two-sided
//! sweep for Hermitian eigenproblems and a one-sided (Hestenes) sweep for the
//! SVD. The operator functions (square root, polar factors, the unitary
//! `P + i·√(I − P²)`) are spectral calculus on top of those.
//!
//! Outputs are deterministic: eigen- and singular vectors are rescaled so that
//! the first entry of largest modulus is real and positive.

mod eigen;
mod operators;
mod svd;

pub use eigen::{hermitian_eig, HermitianEigen};
pub use operators::{
    is_coisometry, is_unitary, matrix_sqrt_psd, operator_norm, polar_decompose, unitary_from_positive, PolarFactors,
};
pub use svd::{singular_values, svd, Svd};

use num_complex::Complex64;
use thiserror::Error;

/// Machine epsilon for `f64`.
pub const EPS: f64 = f64::EPSILON;

/// Relative Frobenius tolerance on `‖A − A*‖` before a matrix is refused as
/// non-Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Slack allowed above 1 for the norm of the argument of
/// [`unitary_from_positive`]. Offending eigenvalues are clamped to 1.
pub const UNIT_NORM_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix must be square (got {rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (‖A − A*‖_F = {defect:e})")]
    NotHermitian { defect: f64 },
    #[error("matrix is not positive semidefinite (eigenvalue {min_eigenvalue:e} below −{threshold:e})")]
    NotPsd { min_eigenvalue: f64, threshold: f64 },
    #[error("operator norm {norm} exceeds 1")]
    NormExceedsOne { norm: f64 },
}

/// Numerical rank cutoff: a singular value counts as zero when it does not
/// exceed `max(rows, cols)·ε·σ_max`.
pub fn rank_threshold(rows: usize, cols: usize, sigma_max: f64) -> f64 {
    rows.max(cols) as f64 * EPS * sigma_max
}

/// Index of the first entry of largest modulus.
pub(crate) fn pivot_index(v: &[Complex64]) -> usize {
    let mut best = 0;
    let mut best_abs = -1.0;
    for (k, z) in v.iter().enumerate() {
        let a = z.norm();
        if a > best_abs {
            best = k;
            best_abs = a;
        }
    }
    best
}

/// Unit phase that makes the pivot entry of `v` real and positive.
pub(crate) fn gauge_phase(v: &[Complex64]) -> Complex64 {
    let p = v[pivot_index(v)];
    let r = p.norm();
    if r == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        p.conj() / r
    }
}

/// Jacobi rotation that diagonalizes the Hermitian 2x2 block
/// `[[a_pp, a_pq], [conj(a_pq), a_qq]]` by congruence `J* A J`, with
/// `J = [[c, s·φ], [−s·conj(φ), c]]` and `φ = a_pq/|a_pq|`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Rotation {
    pub c: f64,
    pub s: f64,
    pub phase: Complex64,
}

impl Rotation {
    pub fn annihilating(app: f64, aqq: f64, apq: Complex64) -> Option<Self> {
        let r = apq.norm();
        if r == 0.0 {
            return None;
        }
        let theta = (aqq - app) / (2.0 * r);
        let t = if theta.is_finite() {
            let t = 1.0 / (theta.abs() + (theta * theta + 1.0).sqrt());
            if theta < 0.0 {
                -t
            } else {
                t
            }
        } else {
            // |a_pq| negligible against the diagonal gap
            0.5 / theta
        };
        let c = 1.0 / (t * t + 1.0).sqrt();
        Some(Self { c, s: t * c, phase: apq / r })
    }

    /// Applies `[x, y] ← [x, y]·J` to a pair of columns.
    #[inline]
    pub fn rotate_columns(&self, x: &mut Complex64, y: &mut Complex64) {
        let (a, b) = (*x, *y);
        *x = a * self.c - self.phase.conj() * b * self.s;
        *y = self.phase * a * self.s + b * self.c;
    }

    /// Applies `[x; y] ← J*·[x; y]` to a pair of rows.
    #[inline]
    pub fn rotate_rows(&self, x: &mut Complex64, y: &mut Complex64) {
        let (a, b) = (*x, *y);
        *x = a * self.c - self.phase * b * self.s;
        *y = self.phase.conj() * a * self.s + b * self.c;
    }
}
