//! An invertible operator as a scaled sum of a unitary and an invertible `R`.

use frameforge::decompose::onb_plus_riesz;
use frameforge::linalg::{is_unitary, operator_norm, singular_values};
use frameforge::random::random_frame;

fn main() {
    let t = random_frame(4, 4, 3);
    let d = onb_plus_riesz(&t, 0.5).unwrap();
    let (w, r) = (&d.factors[0], &d.factors[1]);
    let sigma = singular_values(r);
    println!("W unitary: {}", is_unitary(w, 1e-12));
    println!("σ(R) = {sigma:.4?}, smallest ≥ 1/2: {}", sigma[sigma.len() - 1] >= 0.5 - 1e-12);
    let residual = operator_norm(&(&t - &d.weighted_sum().unwrap()));
    println!("T = {:.4}·(W + R), residual {residual:.1e}", d.scale);
}
