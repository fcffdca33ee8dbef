//! A Parseval frame is the projection of an orthonormal basis, and the
//! average of two orthonormal bases of the larger space. Other frames get
//! there through their canonical Parseval frame.

use frameforge::decompose::{dilated_average_any, naimark_dilate, DecomposeError};
use frameforge::frame::{shift_frame_example, Frame};
use frameforge::linalg::{is_unitary, operator_norm};
use frameforge::random::random_frame;

fn main() {
    let f = shift_frame_example(2);
    let d = naimark_dilate(&f, true).unwrap();
    let (p, first, second) = (&d.factors[0], &d.factors[1], &d.factors[2]);
    println!("P = T*T:\n{p:?}");
    println!("P² = P: {}", (&(p * p) - p).max_abs() < 1e-15);
    println!("both bases orthonormal: {}", is_unitary(first, 1e-15) && is_unitary(second, 1e-15));
    println!("(F + G)/2 = P: {}", (&(first + second).scale(0.5) - p).max_abs() < 1e-15);

    let loose = Frame::new(random_frame(2, 4, 5));
    match naimark_dilate(&loose, true) {
        Err(DecomposeError::NotParseval { .. }) => println!("random 2x4 frame: not Parseval, canonicalizing"),
        other => println!("random 2x4 frame: {other:?}"),
    }
    let dilated = dilated_average_any(&loose).unwrap();
    let error = operator_norm(&(&dilated.recovered() - loose.synthesis()));
    println!("recovered through (TT*)^(1/2): error {error:.1e}");
}
