//! Canonical content digest of a matrix.
//!
//! The digest is 64-bit FNV-1a over the UTF-8 string
//!
//! ```text
//! {rows};{cols};{re_00},{im_00},{re_01},{im_01},...
//! ```
//!
//! with entries in row-major order and every number written as the shortest
//! decimal that round-trips to the same `f64`, in plain positional notation
//! (no exponent): `1`, `-0.5`, `0.1`, `-0`, `0.000001`. This is the output of
//! Rust's `Display` for `f64`. Certificates carry the digest as 16 lowercase
//! hex digits.

use crate::matrix::ComplexMatrix;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// The exact byte string that is hashed.
pub fn canonical_bytes(m: &ComplexMatrix) -> String {
    let mut s = format!("{};{};", m.rows(), m.cols());
    for (k, z) in m.entries().iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&format!("{},{}", z.re, z.im));
    }
    s
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, &b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

pub fn digest(m: &ComplexMatrix) -> u64 {
    fnv1a64(canonical_bytes(m).as_bytes())
}

pub fn digest_hex(m: &ComplexMatrix) -> String {
    format!("{:016x}", digest(m))
}
