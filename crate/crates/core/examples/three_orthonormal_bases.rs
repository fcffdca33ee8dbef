//! Any square matrix is a scaled sum of three unitaries, so any square frame
//! is a scaled sum of three orthonormal bases.

use frameforge::decompose::three_onb_frame;
use frameforge::frame::Frame;
use frameforge::linalg::{is_unitary, operator_norm};
use frameforge::random::SplitMix64;

fn main() {
    let t = SplitMix64::new(42).matrix(4, 4);
    let f = Frame::new(t.clone());
    for eps in [0.1, 0.5, 0.9] {
        let rep = three_onb_frame(&f, eps).expect("nonzero square input");
        let sum = rep.decomposition.weighted_sum().unwrap();
        let orthonormal = rep.bases.iter().all(|b| is_unitary(b.synthesis(), 1e-12));
        println!(
            "ε = {eps}: a = {:.6} (‖T‖ = {:.6}), bases orthonormal: {orthonormal}, ‖T − a(U₁+U₂+U₃)‖ = {:.2e}",
            rep.scale,
            operator_norm(&t),
            operator_norm(&(&t - &sum))
        );
    }
}
