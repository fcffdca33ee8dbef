use num_complex::Complex64;

use super::{gauge_phase, rank_threshold, Rotation, EPS};
use crate::matrix::{inner, vector_norm, ComplexMatrix, ZERO};

const MAX_SWEEPS: usize = 100;

/// Full singular value decomposition `T = U·Σ·V*`.
#[derive(Debug, Clone, PartialEq)]
pub struct Svd {
    /// `rows x rows` unitary.
    pub u: ComplexMatrix,
    /// Descending, non-negative, length `min(rows, cols)`.
    pub sigma: Vec<f64>,
    /// `cols x cols` unitary.
    pub v: ComplexMatrix,
}

impl Svd {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let (m, n) = (self.u.rows(), self.v.rows());
        let r = self.sigma.len();
        ComplexMatrix::from_fn(m, n, |i, j| {
            (0..r).map(|k| self.u.get(i, k) * self.sigma[k] * self.v.get(j, k).conj()).sum()
        })
    }

    pub fn sigma_max(&self) -> f64 {
        self.sigma[0]
    }

    pub fn sigma_min(&self) -> f64 {
        *self.sigma.last().expect("sigma is never empty")
    }

    /// Number of singular values above the numerical rank threshold.
    pub fn rank(&self) -> usize {
        let cut = rank_threshold(self.u.rows(), self.v.rows(), self.sigma_max());
        self.sigma.iter().filter(|&&s| s > cut).count()
    }
}

/// Output of the one-sided sweep on a tall (or square) column set.
struct Orthogonalized {
    /// Columns after rotation, orthogonal to working precision.
    columns: Vec<Vec<Complex64>>,
    /// Accumulated rotations (`n x n`, column-major vectors) when requested.
    rotations: Option<Vec<Vec<Complex64>>>,
}

/// Hestenes iteration: rotates pairs of columns until every pair is
/// orthogonal to `m·ε` relative to the product of their norms.
fn orthogonalize(mut columns: Vec<Vec<Complex64>>, accumulate: bool) -> Orthogonalized {
    let n = columns.len();
    let m = columns[0].len();
    let mut rotations = accumulate.then(|| {
        (0..n)
            .map(|j| (0..n).map(|i| if i == j { Complex64::new(1.0, 0.0) } else { ZERO }).collect())
            .collect::<Vec<Vec<Complex64>>>()
    });
    let tol = m.max(1) as f64 * EPS;

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = columns[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = columns[q].iter().map(|z| z.norm_sqr()).sum();
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                // Gram entry a_p* a_q
                let gamma = inner(&columns[q], &columns[p]);
                if gamma.norm() <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                let Some(rot) = Rotation::annihilating(alpha, beta, gamma) else {
                    continue;
                };
                rotated = true;
                let (left, right) = columns.split_at_mut(q);
                for (x, y) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    rot.rotate_columns(x, y);
                }
                if let Some(v) = rotations.as_mut() {
                    let (left, right) = v.split_at_mut(q);
                    for (x, y) in left[p].iter_mut().zip(right[0].iter_mut()) {
                        rot.rotate_columns(x, y);
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }
    Orthogonalized { columns, rotations }
}

/// Extends orthonormal `basis` (vectors of length `dim`) to a full
/// orthonormal basis of `C^dim`, greedily picking the standard basis vector
/// with the largest component orthogonal to the current span.
fn complete_basis(basis: &mut Vec<Vec<Complex64>>, dim: usize) {
    while basis.len() < dim {
        let mut best: Option<(f64, Vec<Complex64>)> = None;
        for k in 0..dim {
            let mut e = vec![ZERO; dim];
            e[k] = Complex64::new(1.0, 0.0);
            // two passes of modified Gram-Schmidt
            for _ in 0..2 {
                for b in basis.iter() {
                    let proj = inner(&e, b);
                    for (x, y) in e.iter_mut().zip(b) {
                        *x -= proj * y;
                    }
                }
            }
            let norm = vector_norm(&e);
            if best.as_ref().is_none_or(|(bn, _)| norm > *bn) {
                best = Some((norm, e));
            }
        }
        let (norm, e) = best.expect("dimension is positive");
        basis.push(e.into_iter().map(|z| z / norm).collect());
    }
}

/// Singular values only, descending.
pub fn singular_values(t: &ComplexMatrix) -> Vec<f64> {
    let work = if t.rows() >= t.cols() { t.columns() } else { t.adjoint().columns() };
    let out = orthogonalize(work, false);
    let mut sigma: Vec<f64> = out.columns.iter().map(|c| vector_norm(c)).collect();
    sigma.sort_by(|a, b| b.total_cmp(a));
    sigma
}

/// Full SVD by one-sided Jacobi.
///
/// Wide inputs are handled through their adjoint so the sweep always works on
/// the smaller column count. Each left singular vector paired with a singular
/// value is gauge-fixed (pivot entry real positive) and its right partner gets
/// the same phase; completion vectors are gauge-fixed on their own.
pub fn svd(t: &ComplexMatrix) -> Svd {
    let wide = t.rows() < t.cols();
    let work = if wide { t.adjoint() } else { t.clone() };
    // work is tall: work = A·Σ·B*, with A (m x m) and B (n x n)
    let (m, n) = work.shape();
    let out = orthogonalize(work.columns(), true);
    let rotations = out.rotations.expect("accumulated");

    let norms: Vec<f64> = out.columns.iter().map(|c| vector_norm(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| norms[b].total_cmp(&norms[a]));
    let sigma: Vec<f64> = order.iter().map(|&k| norms[k]).collect();
    let cut = rank_threshold(m, n, sigma[0]);

    let mut a_vecs: Vec<Vec<Complex64>> = Vec::with_capacity(m);
    let mut b_vecs: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut paired = 0;
    for (&k, &s) in order.iter().zip(&sigma) {
        if s > cut && s > 0.0 {
            a_vecs.push(out.columns[k].iter().map(|z| z / s).collect());
            paired += 1;
        }
        b_vecs.push(rotations[k].clone());
    }
    // numerically-null directions get fresh orthonormal completions
    complete_basis(&mut a_vecs, m);

    for k in 0..m {
        let g = gauge_phase(&a_vecs[k]);
        for z in a_vecs[k].iter_mut() {
            *z *= g;
        }
        if k < n {
            for z in b_vecs[k].iter_mut() {
                *z *= g;
            }
        }
    }
    debug_assert!(paired <= n);

    let a = ComplexMatrix::from_columns(&a_vecs);
    let b = ComplexMatrix::from_columns(&b_vecs);
    if wide {
        // t = (work)* = B·Σ·A*
        Svd { u: b, sigma, v: a }
    } else {
        Svd { u: a, sigma, v: b }
    }
}
