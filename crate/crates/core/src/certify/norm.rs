//! Spectral norm from products and Frobenius norms only.

use serde::Serialize;

use crate::matrix::ComplexMatrix;

const MAX_SQUARINGS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormMethod {
    Spectral,
    /// Overflow during the power iteration; the Frobenius norm (an upper
    /// bound) was reported instead.
    Frobenius,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate {
    pub value: f64,
    pub method: NormMethod,
}

/// Largest singular value via the power method on the Gram matrix `G`,
/// run on all of `G`'s columns at once by repeated squaring: after `k`
/// squarings `X ∝ G^(2^k)` and `‖G·X‖_F/‖X‖_F` is a weighted mean of the
/// eigenvalues of `G` concentrated on the largest one.
pub fn spectral_norm(m: &ComplexMatrix) -> NormEstimate {
    let fro = m.frobenius_norm();
    if fro == 0.0 {
        return NormEstimate { value: 0.0, method: NormMethod::Spectral };
    }
    let fallback = NormEstimate { value: fro, method: NormMethod::Frobenius };
    if !fro.is_finite() {
        return fallback;
    }
    let unit = m.scale(1.0 / fro);
    let gram = if unit.rows() <= unit.cols() { &unit * &unit.adjoint() } else { &unit.adjoint() * &unit };

    // Stop once X itself is stationary: a stable estimate alone is not
    // enough, since a nearly degenerate top pair keeps it flat for many
    // squarings before the weights separate.
    let mut x = gram.clone();
    let mut estimate = 0.0;
    for _ in 0..MAX_SQUARINGS {
        let xf = x.frobenius_norm();
        if !xf.is_finite() || xf == 0.0 {
            break;
        }
        x = x.scale(1.0 / xf);
        estimate = (&gram * &x).frobenius_norm();
        let next = &x * &x;
        let nf = next.frobenius_norm();
        if !nf.is_finite() || nf == 0.0 {
            break;
        }
        let next = next.scale(1.0 / nf);
        let moved = (&next - &x).frobenius_norm();
        x = next;
        if moved <= 4.0 * f64::EPSILON {
            estimate = (&gram * &x).frobenius_norm();
            break;
        }
    }
    if !estimate.is_finite() {
        return fallback;
    }
    // the Gram spectrum of a unit-Frobenius matrix lies in [0, 1]
    NormEstimate { value: fro * estimate.min(1.0).sqrt(), method: NormMethod::Spectral }
}
