use frameforge::certify::{verify_decomposition, DEFAULT_VERIFY_TOL};
use frameforge::decompose::{
    naimark_dilate, onb_plus_riesz, three_unitary, two_onb_representable, two_parseval, two_unitary, Decomposition,
    Mode,
};
use frameforge::digest::digest;
use frameforge::document::{certificate_to_string, matrix_to_string, parse_certificate, parse_matrix};
use frameforge::frame::{
    analysis_apply, canonical_parseval, frame_bounds, frame_operator, is_riesz_basis, Frame, DEFAULT_CLASSIFICATION_TOL,
};
use frameforge::linalg::{
    hermitian_eig, is_coisometry, is_unitary, matrix_sqrt_psd, operator_norm, polar_decompose, singular_values, svd,
    unitary_from_positive,
};
use frameforge::matrix::{vector_norm, ComplexMatrix};
use frameforge::random::SplitMix64;
use num_complex::Complex64;
use proptest::prelude::*;

fn random(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
    SplitMix64::new(seed).matrix(rows, cols)
}

fn frame(d: usize, n: usize, seed: u64) -> ComplexMatrix {
    SplitMix64::new(seed).full_rank_frame(d, n)
}

/// `d x n` with prescribed singular values: `U·[diag(s) | 0]·W`.
fn with_spectrum(sigma: &[f64], n: usize, seed: u64) -> ComplexMatrix {
    let d = sigma.len();
    let mut g = SplitMix64::new(seed);
    let u = g.unitary(d);
    let w = g.unitary(n);
    let mut core = ComplexMatrix::zeros(d, n);
    for (i, &s) in sigma.iter().enumerate() {
        core.set(i, i, Complex64::new(s, 0.0));
    }
    &(&u * &core) * &w
}

fn residual(t: &ComplexMatrix, d: &Decomposition) -> f64 {
    operator_norm(&(t - &d.weighted_sum().unwrap()))
}

fn decompose(mode: Mode, t: &ComplexMatrix) -> Decomposition {
    let f = Frame::new(t.clone());
    match mode {
        Mode::ThreeUnitary => three_unitary(t, 0.5).unwrap(),
        Mode::TwoUnitary => two_unitary(t).unwrap(),
        Mode::TwoParseval => two_parseval(&f).unwrap(),
        Mode::OnbPlusRiesz => onb_plus_riesz(t, 0.5).unwrap(),
        Mode::NaimarkDilation => frameforge::decompose::dilated_average_any(&f).unwrap().decomposition,
    }
}

fn square_mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::ThreeUnitary), Just(Mode::TwoUnitary), Just(Mode::OnbPlusRiesz)]
}

fn any_mode() -> impl Strategy<Value = Mode> {
    proptest::sample::select(Mode::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn polar_reconstructs(d in 1usize..=64, n in 1usize..=64, seed: u64) {
        let t = random(d, n, seed);
        let p = polar_decompose(&t);
        let err = operator_norm(&(&(&p.v * &p.p) - &t));
        prop_assert!(err <= 1e-10 * operator_norm(&t).max(1.0), "error {err:e}");
        prop_assert!((&(&p.v * &p.v.adjoint()) * &p.v).approx_eq(&p.v, 1e-10));
    }

    #[test]
    fn sqrt_squares_back(n in 1usize..=32, k in 1usize..=32, seed: u64) {
        let g = random(k, n, seed);
        let a = &g.adjoint() * &g;
        let r = matrix_sqrt_psd(&a).unwrap();
        let err = operator_norm(&(&(&r * &r) - &a));
        prop_assert!(err <= 1e-10 * operator_norm(&a).max(1.0), "error {err:e}");
        prop_assert!(r.hermitian_defect() <= 1e-12 * operator_norm(&a).max(1.0));
    }

    #[test]
    fn unitary_from_positive_laws(n in 1usize..=32, seed: u64) {
        let g = random(n, n, seed);
        let a = &g.adjoint() * &g;
        let p = a.scale(1.0 / operator_norm(&a));
        let w = unitary_from_positive(&p).unwrap();
        prop_assert!(is_unitary(&w, 1e-10));
        let half = (&w + &w.adjoint()).scale(0.5);
        prop_assert!(operator_norm(&(&half - &p)) <= 1e-10);
    }

    #[test]
    fn operator_norm_bounds_samples(d in 1usize..=16, n in 1usize..=16, seed: u64) {
        let t = random(d, n, seed);
        let norm = operator_norm(&t);
        let mut g = SplitMix64::new(seed ^ 0x5eed);
        for _ in 0..1000 {
            let x = g.unit_vector(n);
            prop_assert!(vector_norm(&t.apply(&x)) <= norm + 1e-12);
        }
    }

    #[test]
    fn kernels_are_deterministic(d in 1usize..=12, n in 1usize..=12, seed: u64) {
        let t = random(d, n, seed);
        prop_assert_eq!(svd(&t), svd(&t));
        prop_assert_eq!(polar_decompose(&t), polar_decompose(&t));
        let h = &t * &t.adjoint();
        prop_assert_eq!(hermitian_eig(&h).unwrap(), hermitian_eig(&h).unwrap());
        prop_assert_eq!(random(d, n, seed), t);
    }

    #[test]
    fn svd_and_eig_reconstruct(d in 1usize..=24, n in 1usize..=24, seed: u64) {
        let t = random(d, n, seed);
        let s = svd(&t);
        prop_assert!(s.reconstruct().approx_eq(&t, 1e-12));
        prop_assert!(is_unitary(&s.u, 1e-12) && is_unitary(&s.v, 1e-12));
        prop_assert!(s.sigma.windows(2).all(|w| w[0] >= w[1]));
        let h = &t * &t.adjoint();
        let e = hermitian_eig(&h).unwrap();
        prop_assert!(e.reconstruct().approx_eq(&h, 1e-11 * operator_norm(&h).max(1.0)));
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn frame_inequality_and_extremality(d in 1usize..=12, extra in 0usize..=12, seed: u64) {
        let f = Frame::new(frame(d, d + extra, seed));
        let b = frame_bounds(&f);
        let energy = |x: &[Complex64]| analysis_apply(&f, x).unwrap().iter().map(|c| c.norm_sqr()).sum::<f64>();
        let mut g = SplitMix64::new(!seed);
        for _ in 0..1000 {
            let e = energy(&g.unit_vector(d));
            prop_assert!(e >= b.lower - 1e-9 && e <= b.upper + 1e-9);
        }
        let s = svd(f.synthesis());
        prop_assert!((energy(&s.u.column(0)) - b.upper).abs() <= 1e-9);
        prop_assert!((energy(&s.u.column(d - 1)) - b.lower).abs() <= 1e-9);
    }

    #[test]
    fn frame_operator_spectrum_within_bounds(d in 1usize..=16, extra in 0usize..=16, seed: u64) {
        let f = Frame::new(frame(d, d + extra, seed));
        let b = frame_bounds(&f);
        let e = hermitian_eig(&frame_operator(&f)).unwrap();
        prop_assert!(e.values.iter().all(|&l| l >= b.lower - 1e-9 && l <= b.upper + 1e-9));
    }

    #[test]
    fn canonical_parseval_up_to_condition_1e6(
        d in 1usize..=10,
        extra in 0usize..=10,
        exponents in proptest::collection::vec(0.0f64..=6.0, 10),
        seed: u64,
    ) {
        let sigma: Vec<f64> = exponents[..d].iter().map(|&e| 10f64.powf(e)).collect();
        let f = Frame::new(with_spectrum(&sigma, d + extra, seed));
        let c = canonical_parseval(&f).unwrap();
        prop_assert!(is_coisometry(c.synthesis(), 1e-9));
    }

    #[test]
    fn riesz_basis_criterion(d in 1usize..=10, n in 1usize..=14, singular: bool, seed: u64) {
        let mut t = random(d, n, seed);
        if singular && d > 1 {
            t = &random(d, d - 1, seed ^ 1) * &random(d - 1, n, seed ^ 2);
        }
        let f = Frame::new(t);
        let s = f.singular_values();
        let expected = n == d && s[s.len() - 1] > DEFAULT_CLASSIFICATION_TOL * s[0];
        prop_assert_eq!(is_riesz_basis(&f, DEFAULT_CLASSIFICATION_TOL), expected);
        let representable = two_onb_representable(&f, DEFAULT_CLASSIFICATION_TOL).representable;
        prop_assert_eq!(representable, expected);
        if n == d {
            prop_assert_eq!(two_unitary(f.synthesis()).is_ok(), expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn square_modes_reconstruct(mode in square_mode(), d in 1usize..=32, seed: u64) {
        let t = frame(d, d, seed);
        let dec = decompose(mode, &t);
        let norm = operator_norm(&t);
        prop_assert!(residual(&t, &dec) <= 1e-10 * norm.max(1.0));
        prop_assert!(is_unitary(&dec.factors[0], 1e-10));
        let expected = match mode {
            Mode::ThreeUnitary => norm / 0.5,
            Mode::TwoUnitary => norm / 2.0,
            _ => 2.0 * norm / 0.5,
        };
        prop_assert!((dec.scale - expected).abs() <= 4.0 * f64::EPSILON * expected);
        match mode {
            Mode::OnbPlusRiesz => {
                let s = singular_values(&dec.factors[1]);
                prop_assert!(s[s.len() - 1] >= 0.5 - 1e-9);
            }
            _ => prop_assert!(dec.factors.iter().all(|u| is_unitary(u, 1e-10))),
        }
    }

    #[test]
    fn three_unitary_scale_tends_to_norm(d in 1usize..=16, seed: u64) {
        let t = random(d, d, seed);
        let dec = three_unitary(&t, 0.01).unwrap();
        prop_assert!(dec.scale <= 1.02 * operator_norm(&t));
    }

    #[test]
    fn two_parseval_reconstructs(d in 1usize..=32, extra in 0usize..=32, seed: u64) {
        let t = frame(d, (d + extra).min(32), seed);
        let dec = two_parseval(&Frame::new(t.clone())).unwrap();
        let norm = operator_norm(&t);
        prop_assert!(residual(&t, &dec) <= 1e-10 * norm.max(1.0));
        prop_assert!(dec.factors.iter().all(|v| is_coisometry(v, 1e-10)));
        prop_assert!((dec.scale - norm / 2.0).abs() <= 4.0 * f64::EPSILON * norm);
    }

    #[test]
    fn dilation_laws(d in 1usize..=16, extra in 0usize..=16, seed: u64) {
        let n = d + extra;
        let u = SplitMix64::new(seed).unitary(n);
        let t = ComplexMatrix::from_fn(d, n, |i, j| u.get(i, j));
        let dec = naimark_dilate(&Frame::new(t.clone()), true).unwrap();
        let (p, first, second) = (&dec.factors[0], &dec.factors[1], &dec.factors[2]);
        prop_assert!(is_unitary(first, 1e-10) && is_unitary(second, 1e-10));
        prop_assert!(operator_norm(&(&(p * p) - p)) <= 1e-10);
        prop_assert!(operator_norm(&(p - &p.adjoint())) <= 1e-10);
        let average = (first + second).scale(0.5);
        prop_assert!(operator_norm(&(&average - p)) <= 1e-10);
        let gram = (&(&t.adjoint() * &t) - &(&p.adjoint() * p)).max_abs();
        prop_assert!(gram <= 1e-10);
    }

    #[test]
    fn certificates_complete(mode in any_mode(), d in 1usize..=32, extra in 0usize..=32, seed: u64) {
        let n = match mode {
            Mode::TwoParseval | Mode::NaimarkDilation => (d + extra).min(32),
            _ => d,
        };
        let t = frame(d, n, seed);
        let dec = decompose(mode, &t);
        let report = verify_decomposition(&t, &dec, DEFAULT_VERIFY_TOL).unwrap();
        prop_assert!(report.passed, "{report:?}");
    }

    #[test]
    fn certificates_sound(
        mode in any_mode(),
        d in 1usize..=8,
        extra in 0usize..=8,
        seed: u64,
        pick in any::<(usize, usize, usize)>(),
        magnitude in 1e-7f64..1e-2,
        imaginary: bool,
        negative: bool,
    ) {
        let n = match mode {
            Mode::TwoParseval | Mode::NaimarkDilation => d + extra,
            _ => d,
        };
        let mut t = frame(d, n, seed);
        // keep ‖t‖ ≥ 1 so the absolute part of the threshold does not dominate
        let norm = operator_norm(&t);
        if norm < 1.0 {
            t = t.scale(1.0 / norm);
        }
        let mut dec = decompose(mode, &t);
        let factor = &mut dec.factors[pick.0 % mode.factor_count()];
        let (i, j) = (pick.1 % factor.rows(), pick.2 % factor.cols());
        let delta = if negative { -magnitude } else { magnitude };
        let bump = if imaginary { Complex64::new(0.0, delta) } else { Complex64::new(delta, 0.0) };
        factor.set(i, j, factor.get(i, j) + bump);
        let report = verify_decomposition(&t, &dec, DEFAULT_VERIFY_TOL).unwrap();
        prop_assert!(!report.passed, "{report:?}");
    }

    #[test]
    fn certificate_text_round_trip(mode in any_mode(), d in 1usize..=6, extra in 0usize..=6, seed: u64) {
        let n = match mode {
            Mode::TwoParseval | Mode::NaimarkDilation => d + extra,
            _ => d,
        };
        let dec = decompose(mode, &frame(d, n, seed));
        prop_assert_eq!(parse_certificate(&certificate_to_string(&dec)).unwrap(), dec);
    }
}

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO, -1.0f64..1.0,]
}

proptest! {
    #[test]
    fn matrix_text_is_bit_exact(
        (rows, cols, values) in (1usize..=5, 1usize..=5)
            .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec((finite(), finite()), r * c)))
    ) {
        let m = ComplexMatrix::new(rows, cols, values.iter().map(|&(re, im)| Complex64::new(re, im)).collect()).unwrap();
        let back = parse_matrix(&matrix_to_string(&m)).unwrap();
        for (a, b) in back.entries().iter().zip(m.entries()) {
            prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
            prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
        prop_assert_eq!(digest(&back), digest(&m));
    }

    #[test]
    fn generator_is_deterministic(seed: u64, d in 1usize..=6, extra in 0usize..=6) {
        prop_assert_eq!(frame(d, d + extra, seed), frame(d, d + extra, seed));
        let mut g = SplitMix64::new(seed);
        let draws: Vec<f64> = (0..100).map(|_| g.next_symmetric()).collect();
        prop_assert!(draws.iter().all(|x| (-1.0..1.0).contains(x)));
    }
}
