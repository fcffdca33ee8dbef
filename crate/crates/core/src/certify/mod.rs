//! Certificate verification.
//!
//! [`verify_decomposition`] recomputes every law of a [`Decomposition`]
//! from the input and the stored factors using only matrix products, sums,
//! adjoints and norms. It never calls back into the factorization kernels
//! that produced the certificate. [`residual_suite`] drives every applicable
//! decomposition through the verifier.
//!
//! [`Decomposition`]: crate::decompose::Decomposition

mod norm;
mod suite;
mod verifier;

pub use norm::{spectral_norm, NormEstimate, NormMethod};
pub use suite::{residual_suite, SuiteOutcome, SuiteReport};
pub use verifier::{verify_decomposition, FactorResidual, Tolerances, VerificationReport};

use thiserror::Error;

/// Default verification tolerance, applied after scaling by `max(1, ‖T‖)`.
pub const DEFAULT_VERIFY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertifyError {
    #[error("certificate digest {certificate} does not match input digest {input}")]
    DigestMismatch { certificate: String, input: String },
    #[error("certificate does not fit its mode: {0}")]
    ModeShapeMismatch(String),
    #[error(transparent)]
    Frame(#[from] crate::frame::FrameError),
}
