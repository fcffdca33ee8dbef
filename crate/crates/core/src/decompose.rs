//! Constructive operator decompositions of frames.
//!
//! Every construction returns a [`Decomposition`]: a mode tag, a scale, the
//! factor matrices and a digest of the input, which [`crate::certify`] can
//! check with plain matrix arithmetic.
//!
//! | mode | law | factors |
//! |------|-----|---------|
//! | `ThreeUnitary` | `T = a(U₁ + U₂ + U₃)`, `a = ‖T‖/(1−ε)` | three unitaries |
//! | `TwoUnitary` | `T = a(U₁ + U₂)`, `a = ‖T‖/2` | two unitaries, `T` invertible |
//! | `TwoParseval` | `T = a(Y + Z)`, `a = ‖T‖/2` | two co-isometries |
//! | `OnbPlusRiesz` | `T = a(W + R)`, `a = 2‖T‖/(1−ε)` | unitary `W`, invertible `R` |
//! | `NaimarkDilation` | `(F + G)/2 = P = T*T` | projection `P`, unitaries `F`, `G` |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::digest::digest;
use crate::frame::{
    canonical_parseval_with_transform, is_parseval, is_riesz_basis, synthesis_norm, Frame, FrameError,
    DEFAULT_CLASSIFICATION_TOL,
};
use crate::linalg::{operator_norm, polar_decompose, singular_values, unitary_from_positive, LinalgError};
use crate::matrix::ComplexMatrix;

/// Default `ε` for the modes that take one.
pub const DEFAULT_EPSILON: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    ThreeUnitary,
    TwoUnitary,
    TwoParseval,
    OnbPlusRiesz,
    NaimarkDilation,
}

impl Mode {
    pub const ALL: [Mode; 5] =
        [Mode::ThreeUnitary, Mode::TwoUnitary, Mode::TwoParseval, Mode::OnbPlusRiesz, Mode::NaimarkDilation];

    /// Certificate spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::ThreeUnitary => "three-unitary",
            Mode::TwoUnitary => "two-unitary",
            Mode::TwoParseval => "two-parseval",
            Mode::OnbPlusRiesz => "onb-riesz",
            Mode::NaimarkDilation => "naimark",
        }
    }

    pub fn factor_count(self) -> usize {
        match self {
            Mode::ThreeUnitary | Mode::NaimarkDilation => 3,
            Mode::TwoUnitary | Mode::TwoParseval | Mode::OnbPlusRiesz => 2,
        }
    }

    pub fn uses_epsilon(self) -> bool {
        matches!(self, Mode::ThreeUnitary | Mode::OnbPlusRiesz)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown decomposition mode `{0}`")]
pub struct UnknownMode(pub String);

impl FromStr for Mode {
    type Err = UnknownMode;

    /// Accepts the certificate names plus the aliases `three-onb` and
    /// `two-onb`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "three-unitary" | "three-onb" => Ok(Mode::ThreeUnitary),
            "two-unitary" | "two-onb" => Ok(Mode::TwoUnitary),
            "two-parseval" => Ok(Mode::TwoParseval),
            "onb-riesz" => Ok(Mode::OnbPlusRiesz),
            "naimark" => Ok(Mode::NaimarkDilation),
            other => Err(UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DecomposeError {
    #[error("the zero operator has no normalized decomposition")]
    ZeroOperator,
    #[error("operator must be square (got {rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("frame has {count} vectors for dimension {dim}; an orthonormal-basis representation needs N = d")]
    NotSquare { dim: usize, count: usize },
    #[error("epsilon must lie in (0, 1), got {0}")]
    EpsilonOutOfRange(f64),
    #[error("operator is not invertible (σ_min = {sigma_min:e} ≤ threshold {threshold:e})")]
    NotInvertible { sigma_min: f64, threshold: f64 },
    #[error("frame is not Parseval (‖T·T* − I‖ exceeds {tol:e})")]
    NotParseval { tol: f64 },
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A decomposition certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub mode: Mode,
    /// The constant `a` in the mode's law (1 for dilations).
    pub scale: f64,
    pub epsilon: Option<f64>,
    pub factors: Vec<ComplexMatrix>,
    /// [`crate::digest::digest`] of the input synthesis matrix.
    pub input_digest: u64,
    /// For canonicalized dilations, the equivalence `(T·T*)^(−1/2)` that maps
    /// the input onto the dilated Parseval frame.
    pub transform: Option<ComplexMatrix>,
}

impl Decomposition {
    /// `scale · Σ factors` for the additive modes.
    pub fn weighted_sum(&self) -> Option<ComplexMatrix> {
        match self.mode {
            Mode::ThreeUnitary | Mode::TwoUnitary | Mode::TwoParseval | Mode::OnbPlusRiesz => {
                let mut acc = self.factors[0].clone();
                for f in &self.factors[1..] {
                    acc = &acc + f;
                }
                Some(acc.scale(self.scale))
            }
            Mode::NaimarkDilation => None,
        }
    }
}

fn check_epsilon(epsilon: f64) -> Result<(), DecomposeError> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(DecomposeError::EpsilonOutOfRange(epsilon))
    }
}

fn require_square(t: &ComplexMatrix) -> Result<(), DecomposeError> {
    if t.is_square() {
        Ok(())
    } else {
        Err(DecomposeError::NonSquare { rows: t.rows(), cols: t.cols() })
    }
}

fn require_invertible(t: &ComplexMatrix) -> Result<(), DecomposeError> {
    let s = singular_values(t);
    let (hi, lo) = (s[0], s[s.len() - 1]);
    let threshold = DEFAULT_CLASSIFICATION_TOL * hi;
    if lo > threshold {
        Ok(())
    } else {
        Err(DecomposeError::NotInvertible { sigma_min: lo, threshold })
    }
}

/// Splits an invertible `S` with `‖S‖ ≤ 1` as `S = (VW + VW*)/2` where
/// `S = VP` is the polar decomposition and `W = P + i√(I − P²)`.
fn unitary_pair(s: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix), DecomposeError> {
    let polar = polar_decompose(s);
    let w = unitary_from_positive(&polar.p)?;
    Ok((&polar.v * &w, &polar.v * &w.adjoint()))
}

/// `T = a(U₁ + U₂ + U₃)` with `a = ‖T‖/(1−ε)`.
///
/// With `S = I/2 + ((1−ε)/2)·T/‖T‖` (invertible, `‖S‖ < 1`) split as
/// `S = (U₁ + U₂)/2`, the third unitary is `U₃ = −I`.
pub fn three_unitary(t: &ComplexMatrix, epsilon: f64) -> Result<Decomposition, DecomposeError> {
    require_square(t)?;
    check_epsilon(epsilon)?;
    let norm = operator_norm(t);
    if norm == 0.0 {
        return Err(DecomposeError::ZeroOperator);
    }
    let s = t.scale((1.0 - epsilon) / (2.0 * norm)).add_scaled_identity(0.5);
    let (u1, u2) = unitary_pair(&s)?;
    let u3 = ComplexMatrix::identity(t.rows()).scale(-1.0);
    Ok(Decomposition {
        mode: Mode::ThreeUnitary,
        scale: norm / (1.0 - epsilon),
        epsilon: Some(epsilon),
        factors: vec![u1, u2, u3],
        input_digest: digest(t),
        transform: None,
    })
}

/// A square frame written as `x_i = a(f_i + g_i + h_i)` with three
/// orthonormal bases.
#[derive(Debug, Clone)]
pub struct ThreeOnbRepresentation {
    pub scale: f64,
    pub bases: [Frame; 3],
    pub decomposition: Decomposition,
}

pub fn three_onb_frame(f: &Frame, epsilon: f64) -> Result<ThreeOnbRepresentation, DecomposeError> {
    if !f.is_square() {
        return Err(DecomposeError::NotSquare { dim: f.dim(), count: f.count() });
    }
    let decomposition = three_unitary(f.synthesis(), epsilon)?;
    let [u1, u2, u3] = <[ComplexMatrix; 3]>::try_from(decomposition.factors.clone()).expect("three factors");
    Ok(ThreeOnbRepresentation {
        scale: decomposition.scale,
        bases: [Frame::new(u1), Frame::new(u2), Frame::new(u3)],
        decomposition,
    })
}

/// `T = (‖T‖/2)(U₁ + U₂)` for invertible square `T`; refuses singular input
/// with the `σ_min` witness.
pub fn two_unitary(t: &ComplexMatrix) -> Result<Decomposition, DecomposeError> {
    require_square(t)?;
    require_invertible(t)?;
    let norm = operator_norm(t);
    let (u1, u2) = unitary_pair(&t.scale(1.0 / norm))?;
    Ok(Decomposition {
        mode: Mode::TwoUnitary,
        scale: norm / 2.0,
        epsilon: None,
        factors: vec![u1, u2],
        input_digest: digest(t),
        transform: None,
    })
}

/// `T = (‖T‖/2)(VW + VW*)` with `T = VP` and `W = P/‖T‖ + i√(I − P²/‖T‖²)`.
/// For a frame `V` is a co-isometry, so both terms are Parseval frames.
pub fn two_parseval(f: &Frame) -> Result<Decomposition, DecomposeError> {
    crate::frame::require_frame(f, DEFAULT_CLASSIFICATION_TOL)?;
    let t = f.synthesis();
    let norm = synthesis_norm(f);
    let polar = polar_decompose(t);
    let w = unitary_from_positive(&polar.p.scale(1.0 / norm))?;
    let y = &polar.v * &w;
    let z = &polar.v * &w.adjoint();
    Ok(Decomposition {
        mode: Mode::TwoParseval,
        scale: norm / 2.0,
        epsilon: None,
        factors: vec![y, z],
        input_digest: digest(t),
        transform: None,
    })
}

/// `T = (2‖T‖/(1−ε))(W + R)` with `W` unitary and `R = W₂ − (3/2)I`
/// invertible (`σ_min(R) ≥ 1/2`).
///
/// `S = (3/4)I + ((1−ε)/4)·T/‖T‖` is split as `S = (W + W₂)/2` with
/// `W = V·W₀`, `W₂ = V·W₀*` from the polar factors of `S`.
pub fn onb_plus_riesz(t: &ComplexMatrix, epsilon: f64) -> Result<Decomposition, DecomposeError> {
    require_square(t)?;
    check_epsilon(epsilon)?;
    let norm = operator_norm(t);
    if norm == 0.0 {
        return Err(DecomposeError::ZeroOperator);
    }
    require_invertible(t)?;
    let s = t.scale((1.0 - epsilon) / (4.0 * norm)).add_scaled_identity(0.75);
    let (w, w2) = unitary_pair(&s)?;
    let r = w2.add_scaled_identity(-1.5);
    Ok(Decomposition {
        mode: Mode::OnbPlusRiesz,
        scale: 2.0 * norm / (1.0 - epsilon),
        epsilon: Some(epsilon),
        factors: vec![w, r],
        input_digest: digest(t),
        transform: None,
    })
}

/// Dilates a Parseval frame to the average of two orthonormal bases of
/// `K = C^N`.
///
/// `P = T*T` is the projection onto the range of the isometry `T*`, the first
/// basis is `Pe_i + (I−P)e_i = e_i` and the second is
/// `Pe_i − (I−P)e_i = (2P − I)e_i`; their average is `Pe_i = T*x_i`.
/// Factors are `[P, F, G]`. With `require_parseval` unset the caller vouches
/// for the hypothesis.
pub fn naimark_dilate(f: &Frame, require_parseval: bool) -> Result<Decomposition, DecomposeError> {
    if require_parseval && !is_parseval(f, DEFAULT_CLASSIFICATION_TOL) {
        return Err(DecomposeError::NotParseval { tol: DEFAULT_CLASSIFICATION_TOL });
    }
    let t = f.synthesis();
    let n = f.count();
    let p = &t.adjoint() * t;
    let first = ComplexMatrix::identity(n);
    let second = p.scale(2.0).add_scaled_identity(-1.0);
    Ok(Decomposition {
        mode: Mode::NaimarkDilation,
        scale: 1.0,
        epsilon: None,
        factors: vec![p, first, second],
        input_digest: digest(t),
        transform: None,
    })
}

/// Result of dilating an arbitrary frame through its canonical Parseval frame.
#[derive(Debug, Clone)]
pub struct DilatedAverage {
    /// `(T·T*)^(−1/2)`.
    pub transform: ComplexMatrix,
    /// `(T·T*)^(1/2)`, which maps the Parseval frame back onto the input.
    pub inverse_transform: ComplexMatrix,
    pub parseval: Frame,
    /// Dilation of `parseval`, digest bound to the original input and
    /// `transform` recorded.
    pub decomposition: Decomposition,
}

impl DilatedAverage {
    /// `transform⁻¹ · parseval · (F + G)/2`, which equals the input frame.
    pub fn recovered(&self) -> ComplexMatrix {
        let f = &self.decomposition.factors;
        let average = (&f[1] + &f[2]).scale(0.5);
        &(&self.inverse_transform * self.parseval.synthesis()) * &average
    }
}

pub fn dilated_average_any(f: &Frame) -> Result<DilatedAverage, DecomposeError> {
    let canonical = canonical_parseval_with_transform(f)?;
    let mut decomposition = naimark_dilate(&canonical.frame, false)?;
    decomposition.input_digest = digest(f.synthesis());
    decomposition.transform = Some(canonical.transform.clone());
    Ok(DilatedAverage {
        transform: canonical.transform,
        inverse_transform: canonical.inverse_transform,
        parseval: canonical.frame,
        decomposition,
    })
}

/// Why a frame is or is not a combination of two orthonormal bases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RepresentabilityWitness {
    /// Square and invertible.
    RieszBasis { sigma_min: f64, threshold: f64 },
    /// `N ≠ d`: no `N` orthonormal vectors can index this frame in `C^d`.
    CountMismatch { dim: usize, count: usize },
    /// Square but singular.
    Singular { sigma_min: f64, threshold: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Representability {
    pub representable: bool,
    pub witness: RepresentabilityWitness,
}

/// Decides whether `f` is a linear combination of two orthonormal bases,
/// which holds exactly for Riesz bases. When it holds, [`two_unitary`]
/// supplies the representation.
pub fn two_onb_representable(f: &Frame, tol: f64) -> Representability {
    if !f.is_square() {
        return Representability {
            representable: false,
            witness: RepresentabilityWitness::CountMismatch { dim: f.dim(), count: f.count() },
        };
    }
    let sigma_min = f.sigma_min();
    let threshold = tol * f.sigma_max();
    if is_riesz_basis(f, tol) {
        Representability { representable: true, witness: RepresentabilityWitness::RieszBasis { sigma_min, threshold } }
    } else {
        Representability { representable: false, witness: RepresentabilityWitness::Singular { sigma_min, threshold } }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::shift_frame_example;
    use crate::linalg::{is_coisometry, is_unitary, svd};
    use crate::matrix::{ONE, ZERO};
    use crate::random::SplitMix64;
    use num_complex::Complex64;

    fn residual(t: &ComplexMatrix, d: &Decomposition) -> f64 {
        operator_norm(&(t - &d.weighted_sum().unwrap()))
    }

    fn scalar(n: usize, z: Complex64) -> ComplexMatrix {
        ComplexMatrix::from_diagonal(&vec![z; n])
    }

    #[test]
    fn three_unitary_identity_closed_form() {
        // S = 3/4·I, W = 3/4 + i√7/4
        let d = three_unitary(&ComplexMatrix::identity(2), 0.5).unwrap();
        assert_eq!(d.scale, 2.0);
        let u1 = Complex64::new(0.75, 7f64.sqrt() / 4.0);
        assert!(d.factors[0].approx_eq(&scalar(2, u1), 1e-15));
        assert!(d.factors[1].approx_eq(&scalar(2, u1.conj()), 1e-15));
        assert_eq!(d.factors[2], scalar(2, -ONE));
        assert!(residual(&ComplexMatrix::identity(2), &d) < 1e-15);
    }

    #[test]
    fn three_unitary_errors() {
        assert_eq!(three_unitary(&ComplexMatrix::zeros(2, 2), 0.5), Err(DecomposeError::ZeroOperator));
        assert!(matches!(three_unitary(&ComplexMatrix::zeros(2, 3), 0.5), Err(DecomposeError::NonSquare { .. })));
        for eps in [0.0, 1.0, -0.2, f64::NAN] {
            assert!(matches!(
                three_unitary(&ComplexMatrix::identity(2), eps),
                Err(DecomposeError::EpsilonOutOfRange(_))
            ));
        }
    }

    #[test]
    fn three_unitary_random() {
        let t = SplitMix64::new(11).matrix(4, 4);
        let d = three_unitary(&t, 0.25).unwrap();
        assert!(residual(&t, &d) <= 1e-10 * operator_norm(&t));
        assert!(d.factors.iter().all(|u| is_unitary(u, 1e-12)));
    }

    #[test]
    fn three_onb_frame_columns() {
        let rep = three_onb_frame(&Frame::new(ComplexMatrix::identity(2)), 0.5).unwrap();
        assert_eq!(rep.scale, 2.0);
        let u = SplitMix64::new(5).unitary(3);
        let f = Frame::new(u.clone());
        let rep = three_onb_frame(&f, 0.5).unwrap();
        for i in 0..3 {
            let sum: Vec<Complex64> = (0..3)
                .map(|k| {
                    (rep.bases[0].vector(i)[k] + rep.bases[1].vector(i)[k] + rep.bases[2].vector(i)[k]) * rep.scale
                })
                .collect();
            let err: f64 = sum.iter().zip(f.vector(i)).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            assert!(err <= 1e-10);
        }
        assert!(matches!(
            three_onb_frame(&shift_frame_example(3), 0.5),
            Err(DecomposeError::NotSquare { dim: 3, count: 4 })
        ));
    }

    #[test]
    fn two_unitary_examples() {
        let u = SplitMix64::new(9).unitary(3);
        let d = two_unitary(&u).unwrap();
        assert!((d.scale - 0.5).abs() < 1e-14);
        // √(1 − λ²) near λ = 1 turns ε-level noise in P into ~1e-8 phases
        assert!(d.factors[0].approx_eq(&u, 1e-7) && d.factors[1].approx_eq(&u, 1e-7));
        assert!(residual(&u, &d) < 1e-14);

        let d = two_unitary(&ComplexMatrix::identity(3).scale(2.0)).unwrap();
        assert_eq!(d.scale, 1.0);
        assert!(d.factors[0].approx_eq(&ComplexMatrix::identity(3), 1e-15));
        assert!(d.factors[1].approx_eq(&ComplexMatrix::identity(3), 1e-15));

        match two_unitary(&ComplexMatrix::from_real_diagonal(&[1.0, 0.0])) {
            Err(DecomposeError::NotInvertible { sigma_min, threshold }) => {
                assert_eq!(sigma_min, 0.0);
                assert_eq!(threshold, 1e-8);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn two_parseval_shift_frame() {
        let f = shift_frame_example(3);
        let d = two_parseval(&f).unwrap();
        assert_eq!(d.scale, 0.5);
        assert!(d.factors[0].approx_eq(f.synthesis(), 1e-15));
        assert!(d.factors[1].approx_eq(f.synthesis(), 1e-15));

        let id = two_parseval(&Frame::new(ComplexMatrix::identity(2))).unwrap();
        assert_eq!(id.scale, 0.5);
        assert!(id.factors[0].approx_eq(&ComplexMatrix::identity(2), 1e-15));
    }

    #[test]
    fn two_parseval_random_rectangular() {
        let t = SplitMix64::new(21).full_rank_frame(3, 5);
        let d = two_parseval(&Frame::new(t.clone())).unwrap();
        assert!(d.factors.iter().all(|y| is_coisometry(y, 1e-9)));
        assert!(residual(&t, &d) <= 1e-10 * operator_norm(&t));
        assert!(matches!(
            two_parseval(&Frame::new(ComplexMatrix::from_real_diagonal(&[1.0, 0.0]))),
            Err(DecomposeError::Frame(FrameError::NotAFrame { .. }))
        ));
    }

    #[test]
    fn onb_plus_riesz_identity_closed_form() {
        // S = 7/8·I, W = 7/8 + i√15/8, R = −5/8 − i√15/8
        let d = onb_plus_riesz(&ComplexMatrix::identity(2), 0.5).unwrap();
        assert_eq!(d.scale, 4.0);
        let r15 = 15f64.sqrt() / 8.0;
        assert!(d.factors[0].approx_eq(&scalar(2, Complex64::new(0.875, r15)), 1e-15));
        assert!(d.factors[1].approx_eq(&scalar(2, Complex64::new(-0.625, -r15)), 1e-15));
        assert!(residual(&ComplexMatrix::identity(2), &d) < 1e-15);
    }

    #[test]
    fn onb_plus_riesz_unitary_input() {
        let u = SplitMix64::new(4).unitary(4);
        let d = onb_plus_riesz(&u, 0.5).unwrap();
        assert!(is_unitary(&d.factors[0], 1e-12));
        assert!(svd(&d.factors[1]).sigma_min() >= 0.5 - 1e-12);
        assert!(matches!(
            onb_plus_riesz(&ComplexMatrix::from_real_diagonal(&[1.0, 0.0]), 0.5),
            Err(DecomposeError::NotInvertible { .. })
        ));
        assert_eq!(onb_plus_riesz(&ComplexMatrix::zeros(2, 2), 0.5), Err(DecomposeError::ZeroOperator));
    }

    #[test]
    fn naimark_shift_frame() {
        let d = naimark_dilate(&shift_frame_example(3), true).unwrap();
        assert_eq!(d.factors[0], ComplexMatrix::from_real_diagonal(&[0.0, 1.0, 1.0, 1.0]));
        assert_eq!(d.factors[1], ComplexMatrix::identity(4));
        assert_eq!(d.factors[2], ComplexMatrix::from_real_diagonal(&[-1.0, 1.0, 1.0, 1.0]));
        let avg = (&d.factors[1] + &d.factors[2]).scale(0.5);
        assert_eq!(avg.column(0), vec![ZERO; 4]);
        assert_eq!(avg, d.factors[0]);
    }

    #[test]
    fn naimark_identity_and_refusal() {
        let d = naimark_dilate(&Frame::new(ComplexMatrix::identity(3)), true).unwrap();
        for f in &d.factors {
            assert_eq!(f, &ComplexMatrix::identity(3));
        }
        let doubled = Frame::new(ComplexMatrix::from_real(2, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 1.0]).unwrap());
        assert!(matches!(naimark_dilate(&doubled, true), Err(DecomposeError::NotParseval { .. })));
    }

    #[test]
    fn naimark_gram_identity_random() {
        let t = crate::frame::canonical_parseval(&Frame::new(SplitMix64::new(2).full_rank_frame(2, 5))).unwrap();
        let d = naimark_dilate(&t, true).unwrap();
        let p = &d.factors[0];
        let gram = &t.synthesis().adjoint() * t.synthesis();
        let lifted_gram = &p.adjoint() * p;
        assert!(gram.approx_eq(&lifted_gram, 1e-10));
    }

    #[test]
    fn dilated_average_examples() {
        let s = shift_frame_example(2);
        let da = dilated_average_any(&s).unwrap();
        assert!(da.transform.approx_eq(&ComplexMatrix::identity(2), 1e-15));
        assert_eq!(da.decomposition.factors, naimark_dilate(&s, true).unwrap().factors);

        let doubled = Frame::new(ComplexMatrix::from_real(2, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 1.0]).unwrap());
        let da = dilated_average_any(&doubled).unwrap();
        let h = 0.5f64.sqrt();
        assert!(da.transform.approx_eq(&ComplexMatrix::from_real_diagonal(&[1.0, h]), 1e-15));
        assert!(da.inverse_transform.approx_eq(&ComplexMatrix::from_real_diagonal(&[1.0, 2f64.sqrt()]), 1e-15));
        assert!(da.recovered().approx_eq(doubled.synthesis(), 1e-14));
        assert_eq!(da.decomposition.input_digest, digest(doubled.synthesis()));

        let r = Frame::new(SplitMix64::new(8).full_rank_frame(3, 6));
        let da = dilated_average_any(&r).unwrap();
        assert!(operator_norm(&(&da.recovered() - r.synthesis())) <= 1e-9);
    }

    #[test]
    fn representability() {
        let r = two_onb_representable(&shift_frame_example(3), DEFAULT_CLASSIFICATION_TOL);
        assert!(!r.representable);
        assert_eq!(r.witness, RepresentabilityWitness::CountMismatch { dim: 3, count: 4 });
        assert!(two_onb_representable(&Frame::new(ComplexMatrix::identity(3)), 1e-8).representable);
        let r = two_onb_representable(&Frame::new(ComplexMatrix::from_real_diagonal(&[1.0, 0.0])), 1e-8);
        assert!(matches!(r.witness, RepresentabilityWitness::Singular { sigma_min, .. } if sigma_min == 0.0));
    }

    #[test]
    fn mode_names_round_trip() {
        for m in Mode::ALL {
            assert_eq!(m.as_str().parse::<Mode>().unwrap(), m);
        }
        assert_eq!("three-onb".parse::<Mode>().unwrap(), Mode::ThreeUnitary);
        assert_eq!("two-onb".parse::<Mode>().unwrap(), Mode::TwoUnitary);
        assert!("four-onb".parse::<Mode>().is_err());
    }
}
