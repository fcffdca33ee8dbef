use num_complex::Complex64;

use super::{gauge_phase, LinalgError, Rotation, EPS, HERMITIAN_TOL};
use crate::matrix::{ComplexMatrix, ZERO};

const MAX_SWEEPS: usize = 100;

/// Spectral decomposition `A = Q·diag(λ)·Q*` of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// Rebuilds `Q·diag(f(λ))·Q*`.
    pub fn apply_function(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let n = self.values.len();
        let q = &self.vectors;
        let fv: Vec<Complex64> = self.values.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |i, j| (0..n).map(|k| q.get(i, k) * fv[k] * q.get(j, k).conj()).sum())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply_function(|l| Complex64::new(l, 0.0))
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// The input is symmetrized as `(A + A*)/2` after the Hermitian check.
/// Sweeps stop once the off-diagonal Frobenius mass drops to `n·ε·‖A‖_F`.
pub fn hermitian_eig(a: &ComplexMatrix) -> Result<HermitianEigen, LinalgError> {
    let (rows, cols) = a.shape();
    if rows != cols {
        return Err(LinalgError::NonSquare { rows, cols });
    }
    let n = rows;
    let scale = a.frobenius_norm();
    let defect = a.hermitian_defect();
    if defect > HERMITIAN_TOL * scale.max(1.0) {
        return Err(LinalgError::NotHermitian { defect });
    }

    let mut m: Vec<Complex64> = vec![ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            m[i * n + j] = (a.get(i, j) + a.get(j, i).conj()) * 0.5;
        }
        m[i * n + i] = Complex64::new(m[i * n + i].re, 0.0);
    }
    let mut v = ComplexMatrix::identity(n).entries().to_vec();

    let threshold = n as f64 * EPS * scale;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m, n) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let Some(rot) = Rotation::annihilating(m[p * n + p].re, m[q * n + q].re, m[p * n + q]) else {
                    continue;
                };
                for k in 0..n {
                    let (mut x, mut y) = (m[k * n + p], m[k * n + q]);
                    rot.rotate_columns(&mut x, &mut y);
                    m[k * n + p] = x;
                    m[k * n + q] = y;
                }
                for k in 0..n {
                    let (mut x, mut y) = (m[p * n + k], m[q * n + k]);
                    rot.rotate_rows(&mut x, &mut y);
                    m[p * n + k] = x;
                    m[q * n + k] = y;
                }
                m[p * n + q] = ZERO;
                m[q * n + p] = ZERO;
                m[p * n + p] = Complex64::new(m[p * n + p].re, 0.0);
                m[q * n + q] = Complex64::new(m[q * n + q].re, 0.0);
                for k in 0..n {
                    let (mut x, mut y) = (v[k * n + p], v[k * n + q]);
                    rot.rotate_columns(&mut x, &mut y);
                    v[k * n + p] = x;
                    v[k * n + q] = y;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| m[x * n + x].re.total_cmp(&m[y * n + y].re));
    let values: Vec<f64> = order.iter().map(|&k| m[k * n + k].re).collect();
    let columns: Vec<Vec<Complex64>> = order
        .iter()
        .map(|&k| {
            let col: Vec<Complex64> = (0..n).map(|i| v[i * n + k]).collect();
            let g = gauge_phase(&col);
            col.into_iter().map(|z| z * g).collect()
        })
        .collect();

    Ok(HermitianEigen { values, vectors: ComplexMatrix::from_columns(&columns) })
}

fn off_diagonal_norm(m: &[Complex64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m[i * n + j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}
