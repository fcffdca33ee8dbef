//! The `frameforge` command line.
//!
//! Reports go to stdout as JSON, diagnostics to stderr. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | certificate failed verification |
//! | 2 | unreadable or malformed document, bad parameters |
//! | 3 | non-finite number in a document |
//! | 4 | operator not invertible / not a frame |
//! | 5 | mode not applicable to the input shape |
//! | 6 | dilation of a non-Parseval frame without `--canonicalize` |
//! | 7 | certificate digest does not match the input |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::certify::{verify_decomposition, CertifyError, VerificationReport, DEFAULT_VERIFY_TOL};
use crate::decompose::{
    dilated_average_any, naimark_dilate, onb_plus_riesz, three_unitary, two_parseval, two_unitary, DecomposeError,
    Decomposition, Mode, DEFAULT_EPSILON,
};
use crate::document::{read_certificate, read_matrix, write_certificate, write_matrix, DocumentError};
use crate::frame::{
    frame_bounds, is_frame, is_parseval, is_riesz_basis, shift_frame_example, Frame, FrameError,
    DEFAULT_CLASSIFICATION_TOL,
};
use crate::random::random_frame;

/// Environment variable overriding the verification tolerance.
pub const TOL_ENV: &str = "FRAMEFORGE_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Ok = 0,
    VerificationFailed = 1,
    BadInput = 2,
    NonFinite = 3,
    NotInvertible = 4,
    ShapeInapplicable = 5,
    NotParseval = 6,
    DigestMismatch = 7,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(name = "frameforge", version, about = "Frame analysis and verifiable operator decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frame bounds and classification of a synthesis matrix.
    Analyze { input: PathBuf },
    /// Decompose a matrix and write a certificate.
    Decompose {
        /// three-unitary (alias three-onb), two-unitary (alias two-onb),
        /// two-parseval, onb-riesz or naimark.
        #[arg(long)]
        mode: Mode,
        /// Slack in (0, 1) for three-unitary and onb-riesz [default: 0.5].
        #[arg(long)]
        epsilon: Option<f64>,
        /// For naimark: pass through the canonical Parseval frame first, so
        /// any frame can be dilated.
        #[arg(long)]
        canonicalize: bool,
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a certificate against its input matrix.
    Verify { certificate: PathBuf, input: PathBuf },
    /// Write an example frame.
    Example {
        kind: ExampleKind,
        #[arg(long)]
        dim: usize,
        /// Number of vectors for `random` [default: dim].
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Destination file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExampleKind {
    Shift,
    Random,
}

/// A failed command: exit code plus the message for stderr.
#[derive(Debug)]
struct Failure {
    code: ExitCode,
    message: String,
}

impl Failure {
    fn new(code: ExitCode, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let code = match e {
            DocumentError::NonFinite(_) => ExitCode::NonFinite,
            _ => ExitCode::BadInput,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<DecomposeError> for Failure {
    fn from(e: DecomposeError) -> Self {
        let code = match e {
            DecomposeError::ZeroOperator | DecomposeError::NotInvertible { .. } => ExitCode::NotInvertible,
            DecomposeError::Frame(FrameError::NotAFrame { .. }) => ExitCode::NotInvertible,
            DecomposeError::NonSquare { .. } | DecomposeError::NotSquare { .. } => ExitCode::ShapeInapplicable,
            DecomposeError::EpsilonOutOfRange(_) => ExitCode::BadInput,
            DecomposeError::NotParseval { .. } => ExitCode::NotParseval,
            DecomposeError::Frame(_) | DecomposeError::Linalg(_) => ExitCode::NotInvertible,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CertifyError> for Failure {
    fn from(e: CertifyError) -> Self {
        let code = match e {
            CertifyError::DigestMismatch { .. } => ExitCode::DigestMismatch,
            CertifyError::ModeShapeMismatch(_) => ExitCode::VerificationFailed,
            CertifyError::Frame(_) => ExitCode::NotInvertible,
        };
        Failure::new(code, e.to_string())
    }
}

#[derive(Debug, Serialize)]
struct AnalyzeReport {
    dim: usize,
    count: usize,
    operator_norm: f64,
    lower_bound: f64,
    upper_bound: f64,
    is_frame: bool,
    is_parseval: bool,
    is_riesz_basis: bool,
    /// `null` when the lower bound is zero.
    condition: Option<f64>,
}

#[derive(Debug, Serialize)]
struct DecomposeSummary<'a> {
    certificate: &'a Path,
    #[serde(skip_serializing_if = "Option::is_none")]
    transform: Option<&'a Path>,
    mode: &'static str,
    scale: f64,
    input_digest: String,
    report: VerificationReport,
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    let _ = writeln!(out, "{text}");
}

fn analyze(input: &Path, out: &mut dyn Write) -> Result<ExitCode, Failure> {
    let f = Frame::new(read_matrix(input)?);
    let bounds = frame_bounds(&f);
    let tol = DEFAULT_CLASSIFICATION_TOL;
    let condition = bounds.condition();
    print_json(
        out,
        &AnalyzeReport {
            dim: f.dim(),
            count: f.count(),
            operator_norm: f.sigma_max(),
            lower_bound: bounds.lower,
            upper_bound: bounds.upper,
            is_frame: is_frame(&f, tol),
            is_parseval: is_parseval(&f, tol),
            is_riesz_basis: is_riesz_basis(&f, tol),
            condition: condition.is_finite().then_some(condition),
        },
    );
    Ok(ExitCode::Ok)
}

fn build(mode: Mode, epsilon: Option<f64>, canonicalize: bool, f: &Frame) -> Result<Decomposition, Failure> {
    if epsilon.is_some() && !mode.uses_epsilon() {
        return Err(Failure::new(ExitCode::BadInput, format!("--epsilon does not apply to mode {mode}")));
    }
    if canonicalize && mode != Mode::NaimarkDilation {
        return Err(Failure::new(
            ExitCode::BadInput,
            format!("--canonicalize only applies to mode naimark, not {mode}"),
        ));
    }
    let eps = epsilon.unwrap_or(DEFAULT_EPSILON);
    let t = f.synthesis();
    let d = match mode {
        Mode::ThreeUnitary => three_unitary(t, eps)?,
        Mode::TwoUnitary if !f.is_square() => {
            return Err(DecomposeError::NotSquare { dim: f.dim(), count: f.count() }.into());
        }
        Mode::TwoUnitary => two_unitary(t)?,
        Mode::TwoParseval => two_parseval(f)?,
        Mode::OnbPlusRiesz => onb_plus_riesz(t, eps)?,
        Mode::NaimarkDilation if canonicalize => dilated_average_any(f)?.decomposition,
        Mode::NaimarkDilation => naimark_dilate(f, true)?,
    };
    Ok(d)
}

fn decompose(
    mode: Mode,
    epsilon: Option<f64>,
    canonicalize: bool,
    input: &Path,
    output: &Path,
    out: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    let t = read_matrix(input)?;
    let d = build(mode, epsilon, canonicalize, &Frame::new(t.clone()))?;
    write_certificate(output, &d)?;
    let transform_path = output.with_extension("transform.json");
    let transform = match &d.transform {
        Some(tr) => {
            write_matrix(&transform_path, tr)?;
            Some(transform_path.as_path())
        }
        None => None,
    };
    let report = verify_decomposition(&t, &d, verify_tolerance()?)?;
    print_json(
        out,
        &DecomposeSummary {
            certificate: output,
            transform,
            mode: mode.as_str(),
            scale: d.scale,
            input_digest: format!("{:016x}", d.input_digest),
            report,
        },
    );
    Ok(ExitCode::Ok)
}

fn verify_tolerance() -> Result<f64, Failure> {
    match std::env::var(TOL_ENV) {
        Err(_) => Ok(DEFAULT_VERIFY_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(tol) if tol.is_finite() && tol > 0.0 => Ok(tol),
            _ => Err(Failure::new(ExitCode::BadInput, format!("{TOL_ENV} must be a positive number, got `{s}`"))),
        },
    }
}

fn verify(certificate: &Path, input: &Path, out: &mut dyn Write) -> Result<ExitCode, Failure> {
    let tol = verify_tolerance()?;
    let d = read_certificate(certificate)?;
    let t = read_matrix(input)?;
    let report = verify_decomposition(&t, &d, tol)?;
    let passed = report.passed;
    print_json(out, &report);
    Ok(if passed { ExitCode::Ok } else { ExitCode::VerificationFailed })
}

fn example(
    kind: ExampleKind,
    dim: usize,
    count: Option<usize>,
    seed: u64,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    if dim == 0 {
        return Err(Failure::new(ExitCode::BadInput, "--dim must be at least 1"));
    }
    let m = match kind {
        ExampleKind::Shift => {
            if count.is_some_and(|n| n != dim + 1) {
                return Err(Failure::new(ExitCode::BadInput, "the shift frame always has dim + 1 vectors"));
            }
            shift_frame_example(dim).into_synthesis()
        }
        ExampleKind::Random => {
            let n = count.unwrap_or(dim);
            if n < dim {
                return Err(Failure::new(
                    ExitCode::BadInput,
                    format!("--count {n} < --dim {dim}: fewer vectors than dimensions cannot span"),
                ));
            }
            random_frame(dim, n, seed)
        }
    };
    match output {
        Some(path) => write_matrix(path, &m)?,
        None => {
            let _ = out.write_all(crate::document::matrix_to_string(&m).as_bytes());
        }
    }
    Ok(ExitCode::Ok)
}

/// Runs the command line on `args` (including the program name) and returns
/// the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::BadInput.code() } else { ExitCode::Ok.code() };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { input } => analyze(&input, out),
        Command::Decompose { mode, epsilon, canonicalize, input, output } => {
            decompose(mode, epsilon, canonicalize, &input, &output, out)
        }
        Command::Verify { certificate, input } => verify(&certificate, &input, out),
        Command::Example { kind, dim, count, seed, output } => example(kind, dim, count, seed, output.as_deref(), out),
    };
    match result {
        Ok(code) => code.code(),
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code.code()
        }
    }
}

/// Runs on the process arguments with the standard streams.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
