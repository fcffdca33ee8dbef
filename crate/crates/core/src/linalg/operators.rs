use num_complex::Complex64;

use super::{hermitian_eig, rank_threshold, singular_values, svd, LinalgError, EPS, UNIT_NORM_SLACK};
use crate::matrix::ComplexMatrix;

/// Largest singular value. `operator_norm(0) = 0`.
pub fn operator_norm(t: &ComplexMatrix) -> f64 {
    singular_values(t)[0]
}

/// Principal square root of a Hermitian positive semidefinite matrix.
///
/// Eigenvalues in `[−n·ε·max|λ|, 0)` are rounding dust and clamp to 0;
/// anything more negative is refused.
pub fn matrix_sqrt_psd(a: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    let eig = hermitian_eig(a)?;
    let threshold = psd_threshold(&eig.values);
    let min = eig.values[0];
    if min < -threshold {
        return Err(LinalgError::NotPsd { min_eigenvalue: min, threshold });
    }
    Ok(eig.apply_function(|l| Complex64::new(l.max(0.0).sqrt(), 0.0)))
}

fn psd_threshold(values: &[f64]) -> f64 {
    let top = values.iter().fold(0.0f64, |acc, l| acc.max(l.abs()));
    values.len() as f64 * EPS * top
}

/// Polar factors `T = V·P`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarFactors {
    /// Maximal partial isometry, same shape as `T`.
    pub v: ComplexMatrix,
    /// `√(T*T)`, Hermitian positive semidefinite.
    pub p: ComplexMatrix,
}

/// Polar decomposition through the SVD: with `T = U·Σ·W*`,
/// `V = Σ_k u_k w_k*` and `P = Σ_k σ_k w_k w_k*`, both summed over the
/// singular values above the rank threshold, so `ker V = ker P`.
///
/// A full-row-rank `T` gives a co-isometry (`V·V* = I`); square invertible
/// `T` gives a unitary `V`. Rank-deficient input gives a genuine partial
/// isometry, and the zero matrix gives `V = 0, P = 0`.
pub fn polar_decompose(t: &ComplexMatrix) -> PolarFactors {
    let (d, n) = t.shape();
    let s = svd(t);
    let cut = rank_threshold(d, n, s.sigma_max());
    let rank = s.sigma.iter().take_while(|&&x| x > cut).count();

    let v = ComplexMatrix::from_fn(d, n, |i, j| (0..rank).map(|k| s.u.get(i, k) * s.v.get(j, k).conj()).sum());
    let mut p = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let z: Complex64 = (0..rank).map(|k| s.v.get(i, k) * s.sigma[k] * s.v.get(j, k).conj()).sum();
            if i == j {
                p.set(i, i, Complex64::new(z.re, 0.0));
            } else {
                p.set(i, j, z);
                p.set(j, i, z.conj());
            }
        }
    }
    PolarFactors { v, p }
}

/// For Hermitian `0 ≤ P ≤ I`, returns the unitary `W = P + i·√(I − P²)`,
/// which satisfies `P = (W + W*)/2`.
///
/// Norms up to `1 + 1e-12` are accepted with the excess clamped to 1.
pub fn unitary_from_positive(p: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    let eig = hermitian_eig(p)?;
    let top = *eig.values.last().expect("non-empty spectrum");
    let min = eig.values[0];
    let norm = top.max(-min);
    if norm > 1.0 + UNIT_NORM_SLACK {
        return Err(LinalgError::NormExceedsOne { norm });
    }
    let threshold = psd_threshold(&eig.values);
    if min < -threshold {
        return Err(LinalgError::NotPsd { min_eigenvalue: min, threshold });
    }
    Ok(eig.apply_function(|l| {
        let l = l.clamp(0.0, 1.0);
        Complex64::new(l, (1.0 - l * l).sqrt())
    }))
}

fn identity_defect(g: &ComplexMatrix) -> f64 {
    let mut r = g.clone();
    for i in 0..r.rows() {
        r.set(i, i, r.get(i, i) - 1.0);
    }
    operator_norm(&r)
}

/// `‖U*U − I‖ ≤ tol` for a square `U`.
pub fn is_unitary(u: &ComplexMatrix, tol: f64) -> bool {
    u.is_square() && identity_defect(&(&u.adjoint() * u)) <= tol
}

/// `‖V·V* − I‖ ≤ tol`.
pub fn is_coisometry(v: &ComplexMatrix, tol: f64) -> bool {
    identity_defect(&(v * &v.adjoint())) <= tol
}
