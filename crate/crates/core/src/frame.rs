//! Frames for `C^d` as synthesis matrices.
//!
//! A frame with vectors `x_1, …, x_N` is stored as the `d x N` matrix `T`
//! with `T·e_i = x_i`. The analysis operator is `T*`, the frame operator is
//! `T·T*`, and the optimal frame bounds are `σ_min(T)²` and `σ_max(T)²`.
//! Inner products are linear in the first argument.

use std::sync::OnceLock;

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{is_coisometry, operator_norm, polar_decompose, singular_values, svd};
use crate::matrix::{ComplexMatrix, ONE, ZERO};

/// Default relative tolerance for frame classification.
pub const DEFAULT_CLASSIFICATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrameError {
    #[error("vector has length {actual}, expected {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("vectors do not span the space (σ_min = {sigma_min:e}, threshold {threshold:e})")]
    NotAFrame { sigma_min: f64, threshold: f64 },
    #[error("matrix is not a co-isometry (‖V·V* − I‖ exceeds {tol:e})")]
    NotCoisometry { tol: f64 },
}

/// Optimal constants `A ≤ B` in `A‖x‖² ≤ Σ|⟨x, x_n⟩|² ≤ B‖x‖²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

impl FrameBounds {
    /// `√(B/A)`, infinite when `A = 0`.
    pub fn condition(&self) -> f64 {
        if self.lower > 0.0 {
            (self.upper / self.lower).sqrt()
        } else {
            f64::INFINITY
        }
    }
}

/// A finite frame: the columns of its synthesis matrix.
#[derive(Debug, Clone)]
pub struct Frame {
    synthesis: ComplexMatrix,
    sigma: OnceLock<Vec<f64>>,
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.synthesis == other.synthesis
    }
}

impl From<ComplexMatrix> for Frame {
    fn from(synthesis: ComplexMatrix) -> Self {
        Self::new(synthesis)
    }
}

impl Frame {
    pub fn new(synthesis: ComplexMatrix) -> Self {
        Self { synthesis, sigma: OnceLock::new() }
    }

    /// Frame from explicit vectors, each of length `d`.
    pub fn from_vectors(vectors: &[Vec<Complex64>]) -> Self {
        Self::new(ComplexMatrix::from_columns(vectors))
    }

    pub fn synthesis(&self) -> &ComplexMatrix {
        &self.synthesis
    }

    pub fn into_synthesis(self) -> ComplexMatrix {
        self.synthesis
    }

    /// Dimension `d` of the ambient space.
    pub fn dim(&self) -> usize {
        self.synthesis.rows()
    }

    /// Number of frame vectors `N`.
    pub fn count(&self) -> usize {
        self.synthesis.cols()
    }

    pub fn is_square(&self) -> bool {
        self.dim() == self.count()
    }

    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        self.synthesis.column(i)
    }

    /// Singular values of the synthesis matrix, descending (cached).
    pub fn singular_values(&self) -> &[f64] {
        self.sigma.get_or_init(|| singular_values(&self.synthesis))
    }

    pub fn sigma_max(&self) -> f64 {
        self.singular_values()[0]
    }

    /// Smallest singular value counted over `d` directions: zero when there
    /// are fewer vectors than dimensions.
    pub fn sigma_min(&self) -> f64 {
        if self.count() < self.dim() {
            0.0
        } else {
            *self.singular_values().last().expect("non-empty")
        }
    }
}

pub fn frame_bounds(f: &Frame) -> FrameBounds {
    let lo = f.sigma_min();
    let hi = f.sigma_max();
    FrameBounds { lower: lo * lo, upper: hi * hi }
}

/// `T·T*`, a `d x d` Hermitian positive semidefinite matrix.
pub fn frame_operator(f: &Frame) -> ComplexMatrix {
    let t = f.synthesis();
    t * &t.adjoint()
}

/// Coefficients `(⟨x, x_n⟩)_n = T*·x`.
pub fn analysis_apply(f: &Frame, x: &[Complex64]) -> Result<Vec<Complex64>, FrameError> {
    if x.len() != f.dim() {
        return Err(FrameError::DimensionMismatch { expected: f.dim(), actual: x.len() });
    }
    let t = f.synthesis();
    Ok((0..f.count()).map(|n| (0..f.dim()).map(|k| x[k] * t.get(k, n).conj()).sum()).collect())
}

/// Synthesis is onto: `N ≥ d` and `σ_min > tol·σ_max`.
pub fn is_frame(f: &Frame, tol: f64) -> bool {
    f.count() >= f.dim() && f.sigma_min() > tol * f.sigma_max()
}

/// `‖T·T* − I‖ ≤ tol`.
pub fn is_parseval(f: &Frame, tol: f64) -> bool {
    is_coisometry(f.synthesis(), tol)
}

/// Square and onto, i.e. the synthesis matrix is invertible.
pub fn is_riesz_basis(f: &Frame, tol: f64) -> bool {
    f.is_square() && is_frame(f, tol)
}

pub(crate) fn require_frame(f: &Frame, tol: f64) -> Result<(), FrameError> {
    if is_frame(f, tol) {
        Ok(())
    } else {
        Err(FrameError::NotAFrame { sigma_min: f.sigma_min(), threshold: tol * f.sigma_max() })
    }
}

/// A frame together with the equivalence that produced it from another.
#[derive(Debug, Clone)]
pub struct CanonicalParseval {
    /// `(T·T*)^(−1/2)·T`.
    pub frame: Frame,
    /// `(T·T*)^(−1/2)`, Hermitian positive definite.
    pub transform: ComplexMatrix,
    /// `(T·T*)^(1/2)`, the inverse of `transform`.
    pub inverse_transform: ComplexMatrix,
}

/// The canonical Parseval frame `(T·T*)^(−1/2)·T`.
///
/// Computed from the SVD `T = U·Σ·W*`: the result is the co-isometric polar
/// factor `U·W_d*`, so it is Parseval to working precision regardless of the
/// conditioning of `T`.
pub fn canonical_parseval(f: &Frame) -> Result<Frame, FrameError> {
    canonical_parseval_with_transform(f).map(|c| c.frame)
}

pub fn canonical_parseval_with_transform(f: &Frame) -> Result<CanonicalParseval, FrameError> {
    require_frame(f, DEFAULT_CLASSIFICATION_TOL)?;
    let d = f.dim();
    let s = svd(f.synthesis());
    let spectral = |g: &dyn Fn(f64) -> f64| {
        ComplexMatrix::from_fn(d, d, |i, j| (0..d).map(|k| s.u.get(i, k) * g(s.sigma[k]) * s.u.get(j, k).conj()).sum())
    };
    let transform = spectral(&|x| 1.0 / x);
    let inverse_transform = spectral(&|x| x);
    let frame = Frame::new(polar_decompose(f.synthesis()).v);
    Ok(CanonicalParseval { frame, transform, inverse_transform })
}

/// The frame whose synthesis matrix is the co-isometry `v`.
pub fn parseval_from_coisometry(v: ComplexMatrix) -> Result<Frame, FrameError> {
    if !is_coisometry(&v, DEFAULT_CLASSIFICATION_TOL) {
        return Err(FrameError::NotCoisometry { tol: DEFAULT_CLASSIFICATION_TOL });
    }
    Ok(Frame::new(v))
}

/// `x_1 = 0`, `x_{i+1} = e_i`: a Parseval frame of `d + 1` vectors for `C^d`
/// that is not a linear combination of two orthonormal sequences.
pub fn shift_frame_example(d: usize) -> Frame {
    assert!(d >= 1, "dimension must be positive");
    Frame::new(ComplexMatrix::from_fn(d, d + 1, |i, j| if j == i + 1 { ONE } else { ZERO }))
}

/// Operator norm of the synthesis matrix, `√B`.
pub fn synthesis_norm(f: &Frame) -> f64 {
    operator_norm(f.synthesis())
}
