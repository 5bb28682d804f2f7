use std::f64::consts::PI;

use airy_kernel::airy_zeros;
use green_images::*;
use quadrature::Bump;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn no_zeros_in_support() {
    // L is exponentially small further left, which pushes the needed N_max up as 1/L.
    let b = Bump::new(-0.8, 0.7);
    let mut last = f64::INFINITY;
    for n in [16, 64, 256, 1024, 4096] {
        let r = airy_poisson_check(|w| b.eval(w), b.support(), n, f64::INFINITY).unwrap();
        assert_eq!(r.rhs.norm(), 0.0);
        assert_eq!(r.k_max, 0);
        assert!(r.lhs.norm() < last);
        last = r.lhs.norm();
    }
    assert!(last < 1e-12);
}

#[test]
fn bump_around_five() {
    let b = Bump::new(5.0, 2.0);
    let r = airy_poisson_adaptive(|w| b.eval(w), b.support(), 1e-6).unwrap();
    let z = airy_zeros(4).unwrap();
    let oracle: f64 = (1..4).map(|k| 2.0 * PI * b.eval(z.zeros[k]) / z.lprimes[k]).sum();
    assert!((r.rhs.re - oracle).abs() < 1e-14);
    assert!(r.abs_discrepancy <= 1e-6);
}

#[test]
fn bump_centred_on_third_zero() {
    let z = airy_zeros(3).unwrap();
    let b = Bump::unit_peak(z.zeros[2], 0.5);
    let r = airy_poisson_adaptive(|w| b.eval(w), b.support(), 1e-6).unwrap();
    let dominant = 2.0 * PI / z.lprimes[2];
    assert!((r.rhs.re - dominant).abs() < 1e-12);
    assert!((r.lhs.re - dominant).abs() < 1e-6);
}

#[test]
fn twenty_random_bumps() {
    let top = airy_zeros(40).unwrap().zeros[39];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let half: f64 = rng.random_range(0.5..4.0);
        let c: f64 = rng.random_range(1.0 + half..top - half);
        let b = Bump::new(c, half);
        let r = airy_poisson_adaptive(|w| b.eval(w), b.support(), 1e-6).unwrap();
        assert!(r.abs_discrepancy <= 1e-6, "bump at {c} ± {half}: {}", r.abs_discrepancy);
    }
}

#[test]
fn unreachable_tolerance_is_reported() {
    let b = Bump::new(5.0, 2.0);
    assert!(matches!(
        airy_poisson_check(|w| b.eval(w), b.support(), 1, 1e-12),
        Err(green_spectral::FieldError::Precision(_))
    ));
}
