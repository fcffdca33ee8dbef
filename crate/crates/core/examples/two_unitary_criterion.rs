//! Two unitaries suffice exactly for invertible operators.

use frameforge::decompose::{two_onb_representable, two_unitary};
use frameforge::frame::{shift_frame_example, Frame, DEFAULT_CLASSIFICATION_TOL};
use frameforge::linalg::operator_norm;
use frameforge::matrix::ComplexMatrix;
use frameforge::random::random_frame;

fn main() {
    let invertible = random_frame(3, 3, 1);
    let d = two_unitary(&invertible).unwrap();
    let residual = operator_norm(&(&invertible - &d.weighted_sum().unwrap()));
    println!("invertible 3x3: T = {:.4}·(U₁ + U₂), residual {residual:.1e}", d.scale);

    let singular = ComplexMatrix::from_real_diagonal(&[2.0, 1.0, 0.0]);
    match two_unitary(&singular) {
        Ok(_) => println!("diag(2, 1, 0): unexpectedly decomposed"),
        Err(e) => println!("diag(2, 1, 0): {e}"),
    }

    for (name, f) in [
        ("invertible 3x3", Frame::new(invertible)),
        ("diag(2, 1, 0)", Frame::new(singular)),
        ("shift frame d=3", shift_frame_example(3)),
    ] {
        let r = two_onb_representable(&f, DEFAULT_CLASSIFICATION_TOL);
        println!("{name:<16} two orthonormal bases: {:<5} ({:?})", r.representable, r.witness);
    }
}
