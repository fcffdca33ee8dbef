use serde::Serialize;

use super::norm::{spectral_norm, NormMethod};
use super::CertifyError;
use crate::decompose::{Decomposition, Mode};
use crate::digest::digest;
use crate::matrix::ComplexMatrix;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorResidual {
    pub label: &'static str,
    pub defect: f64,
}

/// Thresholds each residual was compared against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub reconstruction: f64,
    pub factor: f64,
    pub scale: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(serialize_with = "serialize_mode")]
    pub mode: Mode,
    pub residual_reconstruction: f64,
    pub residual_factors: Vec<FactorResidual>,
    /// `|a − expected(mode, ‖T‖, ε)|`.
    pub scale_check: f64,
    pub tolerances: Tolerances,
    /// `frobenius` if any norm had to fall back.
    pub norm_method: NormMethod,
    pub passed: bool,
}

fn serialize_mode<S: serde::Serializer>(mode: &Mode, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(mode.as_str())
}

/// Collects norms and remembers whether any of them fell back.
struct Meter {
    method: NormMethod,
}

impl Meter {
    fn norm(&mut self, m: &ComplexMatrix) -> f64 {
        let est = spectral_norm(m);
        if est.method == NormMethod::Frobenius {
            self.method = NormMethod::Frobenius;
        }
        est.value
    }

    fn unitary_defect(&mut self, u: &ComplexMatrix) -> f64 {
        self.norm(&minus_identity(&(&u.adjoint() * u)))
    }

    fn coisometry_defect(&mut self, v: &ComplexMatrix) -> f64 {
        self.norm(&minus_identity(&(v * &v.adjoint())))
    }

    fn projection_defect(&mut self, p: &ComplexMatrix) -> f64 {
        let idempotent = self.norm(&(&(p * p) - p));
        let selfadjoint = self.norm(&(p - &p.adjoint()));
        idempotent.max(selfadjoint)
    }
}

fn minus_identity(m: &ComplexMatrix) -> ComplexMatrix {
    m.add_scaled_identity(-1.0)
}

fn sum(factors: &[ComplexMatrix]) -> ComplexMatrix {
    factors[1..].iter().fold(factors[0].clone(), |acc, f| &acc + f)
}

fn shape_error(reason: String) -> CertifyError {
    CertifyError::ModeShapeMismatch(reason)
}

fn check_shapes(t: &ComplexMatrix, d: &Decomposition) -> Result<(), CertifyError> {
    let mode = d.mode;
    if d.factors.len() != mode.factor_count() {
        return Err(shape_error(format!(
            "mode {mode} needs {} factors, certificate has {}",
            mode.factor_count(),
            d.factors.len()
        )));
    }
    let expected = match mode {
        Mode::ThreeUnitary | Mode::TwoUnitary | Mode::OnbPlusRiesz => {
            if !t.is_square() {
                return Err(shape_error(format!("mode {mode} needs a square input, got {}x{}", t.rows(), t.cols())));
            }
            t.shape()
        }
        Mode::TwoParseval => t.shape(),
        Mode::NaimarkDilation => (t.cols(), t.cols()),
    };
    if let Some(f) = d.factors.iter().find(|f| f.shape() != expected) {
        return Err(shape_error(format!(
            "mode {mode} needs {}x{} factors, found {}x{}",
            expected.0,
            expected.1,
            f.rows(),
            f.cols()
        )));
    }
    match (mode.uses_epsilon(), d.epsilon) {
        (true, Some(e)) if e > 0.0 && e < 1.0 => {}
        (true, other) => return Err(shape_error(format!("mode {mode} needs epsilon in (0, 1), got {other:?}"))),
        (false, Some(e)) => return Err(shape_error(format!("mode {mode} takes no epsilon, got {e}"))),
        (false, None) => {}
    }
    match (&d.transform, mode) {
        (None, _) => {}
        (Some(tr), Mode::NaimarkDilation) if tr.shape() == (t.rows(), t.rows()) => {}
        (Some(tr), _) => {
            return Err(shape_error(format!("unexpected {}x{} transform for mode {mode}", tr.rows(), tr.cols())))
        }
    }
    Ok(())
}

/// Checks a certificate against its input using products, sums, adjoints
/// and norms only.
///
/// Thresholds: reconstruction `tol·max(1, ‖T‖)` (`tol` for dilations, whose
/// frame is normalized), factor defects `tol`, scale `tol·max(1, a)`.
pub fn verify_decomposition(
    t: &ComplexMatrix,
    d: &Decomposition,
    tol: f64,
) -> Result<VerificationReport, CertifyError> {
    let actual = digest(t);
    if actual != d.input_digest {
        return Err(CertifyError::DigestMismatch {
            certificate: format!("{:016x}", d.input_digest),
            input: format!("{actual:016x}"),
        });
    }
    check_shapes(t, d)?;

    let mut meter = Meter { method: NormMethod::Spectral };
    let f = &d.factors;
    let t_norm = meter.norm(t);
    let mut factors = Vec::new();

    let (reconstruction, reference, expected_scale) = match d.mode {
        Mode::ThreeUnitary | Mode::TwoUnitary | Mode::TwoParseval | Mode::OnbPlusRiesz => {
            let residual = meter.norm(&(t - &sum(f).scale(d.scale)));
            let labels: &[&'static str] = match d.mode {
                Mode::ThreeUnitary => &["u1_unitary", "u2_unitary", "u3_unitary"],
                Mode::TwoUnitary => &["u1_unitary", "u2_unitary"],
                Mode::TwoParseval => &["y_coisometry", "z_coisometry"],
                _ => &["w_unitary", "r_shifted_unitary"],
            };
            for (label, factor) in labels.iter().zip(f) {
                let defect = match d.mode {
                    Mode::TwoParseval => meter.coisometry_defect(factor),
                    // R + (3/2)I must be unitary, which puts σ_min(R) ≥ 1/2
                    Mode::OnbPlusRiesz if *label == "r_shifted_unitary" => {
                        meter.unitary_defect(&factor.add_scaled_identity(1.5))
                    }
                    _ => meter.unitary_defect(factor),
                };
                factors.push(FactorResidual { label, defect });
            }
            let expected = match d.mode {
                Mode::ThreeUnitary => t_norm / (1.0 - d.epsilon.unwrap_or(f64::NAN)),
                Mode::OnbPlusRiesz => 2.0 * t_norm / (1.0 - d.epsilon.unwrap_or(f64::NAN)),
                _ => t_norm / 2.0,
            };
            (residual, t_norm, expected)
        }
        Mode::NaimarkDilation => {
            let (p, first, second) = (&f[0], &f[1], &f[2]);
            let frame = match &d.transform {
                Some(tr) => tr * t,
                None => t.clone(),
            };
            let embedded = &frame.adjoint() * &frame;
            let average = (first + second).scale(0.5);
            let residual = meter.norm(&(&average - p)).max(meter.norm(&(p - &embedded)));
            factors.push(FactorResidual { label: "p_projection", defect: meter.projection_defect(p) });
            factors.push(FactorResidual { label: "f_unitary", defect: meter.unitary_defect(first) });
            factors.push(FactorResidual { label: "g_unitary", defect: meter.unitary_defect(second) });
            factors.push(FactorResidual { label: "frame_parseval", defect: meter.coisometry_defect(&frame) });
            (residual, 1.0, 1.0)
        }
    };

    let scale_check = (d.scale - expected_scale).abs();
    let tolerances = Tolerances {
        reconstruction: tol * reference.max(1.0),
        factor: tol,
        scale: tol * expected_scale.abs().max(1.0),
    };
    let passed = reconstruction <= tolerances.reconstruction
        && factors.iter().all(|r| r.defect <= tolerances.factor)
        && scale_check <= tolerances.scale;

    Ok(VerificationReport {
        mode: d.mode,
        residual_reconstruction: reconstruction,
        residual_factors: factors,
        scale_check,
        tolerances,
        norm_method: meter.method,
        passed,
    })
}
