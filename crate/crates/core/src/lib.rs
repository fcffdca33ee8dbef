//! Finite frames in `C^d` and the operator decompositions behind them.
//!
//! A frame is stored as its `d x N` synthesis matrix ([`frame::Frame`]).
//! [`decompose`] writes operators and frames as scaled sums of unitaries,
//! co-isometries and orthonormal-basis dilations, each result carrying
//! a certificate that [`certify`] checks with plain matrix arithmetic.
//! [`document`] and [`cli`] move matrices and certificates through JSON files.

pub mod certify;
pub mod cli;
pub mod decompose;
pub mod digest;
pub mod document;
pub mod frame;
pub mod linalg;
pub mod matrix;
pub mod random;
