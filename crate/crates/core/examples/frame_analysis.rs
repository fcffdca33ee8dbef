//! Frame bounds and classification for a few small frames.

use frameforge::frame::{frame_bounds, is_frame, is_parseval, is_riesz_basis, shift_frame_example, Frame};
use frameforge::matrix::ComplexMatrix;
use frameforge::random::random_frame;

fn describe(name: &str, f: &Frame) {
    let tol = frameforge::frame::DEFAULT_CLASSIFICATION_TOL;
    let b = frame_bounds(f);
    println!(
        "{name:<22} {}x{}  A = {:<10.6} B = {:<10.6} frame: {:<5} parseval: {:<5} riesz: {}",
        f.dim(),
        f.count(),
        b.lower,
        b.upper,
        is_frame(f, tol),
        is_parseval(f, tol),
        is_riesz_basis(f, tol)
    );
}

fn main() {
    describe("identity", &Frame::new(ComplexMatrix::identity(3)));
    describe("shift frame", &shift_frame_example(3));
    describe("diag(1, 0)", &Frame::new(ComplexMatrix::from_real_diagonal(&[1.0, 0.0])));
    describe("random 3x5 (seed 7)", &Frame::new(random_frame(3, 5, 7)));
    // three unit vectors at 120 degrees: tight with A = B = 3/2
    let s = 3f64.sqrt() / 2.0;
    let mercedes = ComplexMatrix::from_real(2, 3, &[1.0, -0.5, -0.5, 0.0, s, -s]).unwrap();
    describe("mercedes-benz", &Frame::new(mercedes));
}
