//! Write a certificate to disk, read it back, verify it, then tamper with it.

use frameforge::certify::{verify_decomposition, DEFAULT_VERIFY_TOL};
use frameforge::decompose::three_unitary;
use frameforge::document::{read_certificate, write_certificate};
use frameforge::random::random_frame;
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = random_frame(3, 3, 9);
    let path = std::env::temp_dir().join("frameforge-example-certificate.json");
    write_certificate(&path, &three_unitary(&t, 0.5)?)?;
    let mut cert = read_certificate(&path)?;
    println!("wrote and reread {}", path.display());

    let honest = verify_decomposition(&t, &cert, DEFAULT_VERIFY_TOL)?;
    println!("honest:   passed {} residual {:.1e}", honest.passed, honest.residual_reconstruction);

    let z = cert.factors[0].get(1, 2);
    cert.factors[0].set(1, 2, z + Complex64::new(1e-4, 0.0));
    let tampered = verify_decomposition(&t, &cert, DEFAULT_VERIFY_TOL)?;
    println!("tampered: passed {} residual {:.1e}", tampered.passed, tampered.residual_reconstruction);

    let other = random_frame(3, 3, 10);
    println!("replayed: {}", verify_decomposition(&other, &cert, DEFAULT_VERIFY_TOL).unwrap_err());
    std::fs::remove_file(path)?;
    Ok(())
}
