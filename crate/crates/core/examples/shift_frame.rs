//! The frame `0, e_1, …, e_d`: Parseval, yet not a combination of two
//! orthonormal bases of `C^d`.

use frameforge::certify::residual_suite;
use frameforge::decompose::two_onb_representable;
use frameforge::frame::{frame_bounds, shift_frame_example, DEFAULT_CLASSIFICATION_TOL};

fn main() {
    let d = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let f = shift_frame_example(d);
    println!("{:?}", f.synthesis());
    let b = frame_bounds(&f);
    println!("bounds ({}, {})", b.lower, b.upper);
    println!("{:?}", two_onb_representable(&f, DEFAULT_CLASSIFICATION_TOL));
    let suite = residual_suite(&f).unwrap();
    println!("{}", serde_json::to_string_pretty(&suite).unwrap());
}
