//! Every frame is a scaled sum of two Parseval frames.

use frameforge::decompose::two_parseval;
use frameforge::frame::{is_parseval, Frame};
use frameforge::linalg::operator_norm;
use frameforge::random::random_frame;

fn main() {
    let t = random_frame(3, 7, 11);
    let d = two_parseval(&Frame::new(t.clone())).unwrap();
    for (name, v) in ["Y", "Z"].iter().zip(&d.factors) {
        println!("{name}: Parseval {}", is_parseval(&Frame::new(v.clone()), 1e-12));
    }
    let residual = operator_norm(&(&t - &d.weighted_sum().unwrap()));
    println!("T = {:.6}·(Y + Z), residual {residual:.1e}", d.scale);
}
