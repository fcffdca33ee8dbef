//! On-disk documents: matrices and decomposition certificates as JSON.
//!
//! Numbers are written as shortest round-trip decimals and read back
//! bit-exactly, so a matrix digest survives a write/read cycle. Non-finite
//! values are refused on read whether they arrive as bare `NaN`/`Infinity`
//! tokens, as strings, or as literals that overflow `f64`.

use std::fmt;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decompose::{Decomposition, Mode};
use crate::matrix::{ComplexMatrix, MatrixError};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("non-finite number in document: {0}")]
    NonFinite(String),
    #[error("invalid document: {0}")]
    Invalid(String),
}

impl From<MatrixError> for DocumentError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::NonFinite { .. } => DocumentError::NonFinite(e.to_string()),
            other => DocumentError::Invalid(other.to_string()),
        }
    }
}

/// A JSON number, or a string spelling of one (`"NaN"`, `"-inf"`, ...).
#[derive(Debug, Clone, Copy, PartialEq)]
struct Number(f64);

impl Serialize for Number {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.0)
    }
}

impl<'de> Deserialize<'de> for Number {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct NumberVisitor;
        impl Visitor<'_> for NumberVisitor {
            type Value = Number;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Number, E> {
                Ok(Number(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Number, E> {
                Ok(Number(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Number, E> {
                Ok(Number(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Number, E> {
                v.trim().parse::<f64>().map(Number).map_err(|_| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
        d.deserialize_any(NumberVisitor)
    }
}

/// `{"rows": r, "cols": c, "entries": [[re, im], ...]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<[Number; 2]>,
}

impl MatrixDocument {
    pub fn to_matrix(&self) -> Result<ComplexMatrix, DocumentError> {
        let entries = self.entries.iter().map(|[re, im]| Complex64::new(re.0, im.0)).collect();
        Ok(ComplexMatrix::new(self.rows, self.cols, entries)?)
    }
}

impl From<&ComplexMatrix> for MatrixDocument {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixDocument {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|z| [Number(z.re), Number(z.im)]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub mode: String,
    pub epsilon: Option<f64>,
    pub scale: f64,
    /// Sixteen lowercase hex digits.
    pub input_digest: String,
    pub factors: Vec<MatrixDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transform: Option<MatrixDocument>,
}

impl From<&Decomposition> for CertificateDocument {
    fn from(d: &Decomposition) -> Self {
        CertificateDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            mode: d.mode.as_str().to_string(),
            epsilon: d.epsilon,
            scale: d.scale,
            input_digest: format!("{:016x}", d.input_digest),
            factors: d.factors.iter().map(MatrixDocument::from).collect(),
            transform: d.transform.as_ref().map(MatrixDocument::from),
        }
    }
}

impl CertificateDocument {
    /// Checks the document invariants (known mode, matching factor count,
    /// well-formed digest, finite numbers) and rebuilds the decomposition.
    /// Factor shapes are left to the verifier.
    pub fn to_decomposition(&self) -> Result<Decomposition, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Invalid(format!("unsupported schema_version `{}`", self.schema_version)));
        }
        let mode = Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == self.mode)
            .ok_or_else(|| DocumentError::Invalid(format!("unknown mode `{}`", self.mode)))?;
        if self.factors.len() != mode.factor_count() {
            return Err(DocumentError::Invalid(format!(
                "mode {mode} needs {} factors, document has {}",
                mode.factor_count(),
                self.factors.len()
            )));
        }
        let hex = &self.input_digest;
        let well_formed = hex.len() == 16 && hex.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b));
        if !well_formed {
            return Err(DocumentError::Invalid(format!("input_digest `{hex}` is not 16 lowercase hex digits")));
        }
        let input_digest = u64::from_str_radix(hex, 16).expect("validated hex");
        if !self.scale.is_finite() || self.epsilon.is_some_and(|e| !e.is_finite()) {
            return Err(DocumentError::NonFinite("scale or epsilon".to_string()));
        }
        Ok(Decomposition {
            mode,
            scale: self.scale,
            epsilon: self.epsilon,
            factors: self.factors.iter().map(MatrixDocument::to_matrix).collect::<Result<_, _>>()?,
            input_digest,
            transform: self.transform.as_ref().map(MatrixDocument::to_matrix).transpose()?,
        })
    }
}

const NON_FINITE_TOKENS: [&str; 4] = ["NaN", "Infinity", "-Infinity", "-NaN"];

/// Distinguishes non-finite values from other syntax errors.
fn classify(text: &str, e: serde_json::Error) -> DocumentError {
    if e.to_string().starts_with("number out of range") {
        return DocumentError::NonFinite(e.to_string());
    }
    if e.is_syntax() {
        let line = text.lines().nth(e.line().saturating_sub(1)).unwrap_or("");
        let start = line.char_indices().nth(e.column().saturating_sub(1)).map_or(line.len(), |(i, _)| i);
        // the reported column sits on the token or one character past it
        let candidates = [&line[start..], &line[line.floor_char_boundary(start.saturating_sub(1))..]];
        if candidates.iter().any(|c| NON_FINITE_TOKENS.iter().any(|t| c.trim_start().starts_with(t))) {
            return DocumentError::NonFinite(e.to_string());
        }
    }
    DocumentError::Parse(e.to_string())
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, DocumentError> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| classify(text, e))?;
    doc.to_matrix()
}

pub fn parse_certificate(text: &str) -> Result<Decomposition, DocumentError> {
    let doc: CertificateDocument = serde_json::from_str(text).map_err(|e| classify(text, e))?;
    doc.to_decomposition()
}

pub fn matrix_to_string(m: &ComplexMatrix) -> String {
    to_pretty(&MatrixDocument::from(m))
}

pub fn certificate_to_string(d: &Decomposition) -> String {
    to_pretty(&CertificateDocument::from(d))
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents hold only finite numbers");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, DocumentError> {
    fs::read_to_string(path).map_err(|source| DocumentError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<(), DocumentError> {
    fs::write(path, text).map_err(|source| DocumentError::Io { path: path.display().to_string(), source })
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix, DocumentError> {
    parse_matrix(&read(path)?)
}

pub fn write_matrix(path: &Path, m: &ComplexMatrix) -> Result<(), DocumentError> {
    write(path, &matrix_to_string(m))
}

pub fn read_certificate(path: &Path) -> Result<Decomposition, DocumentError> {
    parse_certificate(&read(path)?)
}

pub fn write_certificate(path: &Path, d: &Decomposition) -> Result<(), DocumentError> {
    write(path, &certificate_to_string(d))
}
