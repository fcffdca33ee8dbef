use serde::Serialize;

use super::{verify_decomposition, CertifyError, VerificationReport, DEFAULT_VERIFY_TOL};
use crate::decompose::{
    dilated_average_any, naimark_dilate, onb_plus_riesz, three_unitary, two_parseval, two_unitary, DecomposeError,
    Decomposition, Mode, DEFAULT_EPSILON,
};
use crate::frame::{is_parseval, require_frame, Frame, DEFAULT_CLASSIFICATION_TOL};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SuiteOutcome {
    Verified { report: VerificationReport },
    Inapplicable { reason: String },
    Failed { reason: String },
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        match self {
            SuiteOutcome::Verified { report } => report.passed,
            SuiteOutcome::Inapplicable { .. } => true,
            SuiteOutcome::Failed { .. } => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<(String, SuiteOutcome)>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn outcome(&self, mode: Mode) -> Option<&SuiteOutcome> {
        self.entries.iter().find(|(m, _)| m == mode.as_str()).map(|(_, o)| o)
    }
}

fn decompose_for(mode: Mode, f: &Frame) -> Result<Decomposition, DecomposeError> {
    let t = f.synthesis();
    match mode {
        Mode::ThreeUnitary => three_unitary(t, DEFAULT_EPSILON),
        Mode::TwoUnitary => two_unitary(t),
        Mode::TwoParseval => two_parseval(f),
        Mode::OnbPlusRiesz => onb_plus_riesz(t, DEFAULT_EPSILON),
        Mode::NaimarkDilation if is_parseval(f, DEFAULT_CLASSIFICATION_TOL) => naimark_dilate(f, true),
        Mode::NaimarkDilation => dilated_average_any(f).map(|d| d.decomposition),
    }
}

/// Runs and verifies every decomposition that applies to `f`.
///
/// Square frames exercise all five modes; rectangular ones exercise the
/// two-Parseval split and the dilation (through the canonical Parseval frame
/// when `f` is not Parseval itself).
pub fn residual_suite(f: &Frame) -> Result<SuiteReport, CertifyError> {
    require_frame(f, DEFAULT_CLASSIFICATION_TOL)?;
    let mut entries = Vec::new();
    for mode in Mode::ALL {
        let square_only = matches!(mode, Mode::ThreeUnitary | Mode::TwoUnitary | Mode::OnbPlusRiesz);
        let outcome = if square_only && !f.is_square() {
            SuiteOutcome::Inapplicable {
                reason: format!("needs as many vectors as dimensions (N = {} ≠ d = {})", f.count(), f.dim()),
            }
        } else {
            match decompose_for(mode, f) {
                Ok(d) => match verify_decomposition(f.synthesis(), &d, DEFAULT_VERIFY_TOL) {
                    Ok(report) => SuiteOutcome::Verified { report },
                    Err(e) => SuiteOutcome::Failed { reason: e.to_string() },
                },
                Err(e) => SuiteOutcome::Failed { reason: e.to_string() },
            }
        };
        entries.push((mode.as_str().to_string(), outcome));
    }
    let passed = entries.iter().all(|(_, o)| o.passed());
    Ok(SuiteReport { entries, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::shift_frame_example;
    use crate::matrix::ComplexMatrix;
    use crate::random::SplitMix64;

    fn verified(r: &SuiteReport, mode: Mode) -> bool {
        matches!(r.outcome(mode), Some(SuiteOutcome::Verified { report }) if report.passed)
    }

    #[test]
    fn identity_passes_all_modes() {
        let r = residual_suite(&Frame::new(ComplexMatrix::identity(3))).unwrap();
        assert!(r.passed);
        assert!(Mode::ALL.iter().all(|&m| verified(&r, m)));
    }

    #[test]
    fn shift_frame_only_rectangular_modes() {
        let r = residual_suite(&shift_frame_example(3)).unwrap();
        assert!(r.passed);
        assert!(verified(&r, Mode::TwoParseval) && verified(&r, Mode::NaimarkDilation));
        for m in [Mode::ThreeUnitary, Mode::TwoUnitary, Mode::OnbPlusRiesz] {
            assert!(matches!(r.outcome(m), Some(SuiteOutcome::Inapplicable { .. })));
        }
    }

    #[test]
    fn random_invertible_square() {
        let f = Frame::new(SplitMix64::new(88).full_rank_frame(8, 8));
        let r = residual_suite(&f).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(Mode::ALL.iter().all(|&m| verified(&r, m)));
    }

    #[test]
    fn refuses_non_frames() {
        let sing = Frame::new(ComplexMatrix::from_real_diagonal(&[1.0, 0.0]));
        assert!(matches!(residual_suite(&sing), Err(CertifyError::Frame(_))));
    }
}
