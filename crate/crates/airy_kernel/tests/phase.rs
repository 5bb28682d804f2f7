use std::f64::consts::PI;

use airy_kernel::*;

// 40-digit reference: (ω, L(ω), L′(ω)).
const REF: &[(f64, f64, f64)] = &[
    (-3.0, 0.0009390873278107778188, 0.003230807421591832373),
    (-1.0, 0.2231701143571583971767, 0.4312628502020873058523),
    (0.0, 1.047197551196597746154, 1.262684321547946661841),
    (0.5, 1.792700026885750560967, 1.716023962090029065872),
    (1.0, 2.757998430135195626517, 2.138885269373934498248),
    (3.0, 8.460318654735040934885, 3.482239896229307321901),
    (7.5, 28.94680842250660984295, 5.479238009417426860589),
    (9.5, 40.60497951287232165977, 6.165532955529323341566),
    (15.0, 79.02687837575448241289, 7.746324936337422296059),
    (20.0, 120.8254262241445535103, 8.944446527515444105719),
    (40.0, 338.8795899164239094332, 12.64914152062537710494),
];

#[test]
fn reference_values() {
    for &(w, l, lp) in REF {
        let p = phase_l(w, 0).unwrap();
        assert!((p.value - l).abs() < 1e-12 * l.max(1.0), "L({w}) = {} vs {l}", p.value);
        assert!((p.derivative - lp).abs() < 1e-12 * lp.max(1.0), "L'({w})");
    }
}

#[test]
fn special_values() {
    assert!((phase_l(0.0, 0).unwrap().value - PI / 3.0).abs() < 1e-12);
    assert!(phase_l(-8.0, 0).unwrap().value.abs() < 1e-6);
    assert!(phase_l(-10.0, 0).unwrap().value.abs() < 1e-6);
    let w2 = airy_zeros(2).unwrap().zeros[1];
    assert!((phase_l(w2, 0).unwrap().value - 4.0 * PI).abs() < 1e-10);
    assert!(phase_l(f64::NAN, 0).is_err());
    // Deep shadow stays finite.
    let far = phase_l(-500.0, 0).unwrap();
    assert_eq!(far.value, 0.0);
    assert_eq!(far.derivative, 0.0);
}

#[test]
fn strictly_increasing() {
    let mut prev = f64::NEG_INFINITY;
    for i in 0..=10_000 {
        let w = -10.0 + 50.0 * i as f64 / 10_000.0;
        let v = phase_l(w, 0).unwrap().value;
        assert!(v > prev || (w < -9.0 && v >= prev), "ω = {w}");
        prev = v;
    }
}

#[test]
fn derivative_matches_central_difference() {
    let d = 1e-4;
    for i in 0..=200 {
        let w = 0.1 * i as f64;
        let fd = (phase_l(w + d, 0).unwrap().value - phase_l(w - d, 0).unwrap().value) / (2.0 * d);
        let lp = phase_l(w, 0).unwrap().derivative;
        assert!((fd - lp).abs() < 1e-6 * lp.max(1.0), "ω = {w}: {fd} vs {lp}");
    }
}

/// Exact B coefficients from composing the auxiliary series:
/// b₁ = 5/24, b₂ = 0, b₃ = -1105/4608, b₄ = 0, b₅ = 82825/49152.
const B_EXACT: [f64; 5] = [5.0 / 24.0, 0.0, -1105.0 / 4608.0, 0.0, 82825.0 / 49152.0];

#[test]
fn fitted_coefficients() {
    let fit = b_coefficients();
    assert_eq!(fit.coeffs[0], 5.0 / 24.0);
    for k in 1..5 {
        let tol = [0.0, 1e-12, 1e-9, 1e-6, 1e-4][k];
        assert!((fit.coeffs[k] - B_EXACT[k]).abs() < tol, "b{} = {}", k + 1, fit.coeffs[k]);
    }
    assert!(fit.rms_residual < 1e-13);
}

#[test]
fn b_series_basics() {
    let w10 = airy_zeros(10).unwrap().zeros[9];
    let u = w10.powf(1.5);
    assert!((b_series(u, 1).unwrap() - 5.0 / 24.0 / u).abs() < 1e-16);
    assert!(b_series(1e12, 6).unwrap().abs() < 1e-12);
    assert!(b_series(0.5, 1).is_err());
    assert!(b_series(2.0, 0).is_err());
    assert!(b_series(2.0, 7).is_err());
}

#[test]
fn b_series_reproduces_l_at_u_twenty() {
    let u: f64 = 20.0;
    let w = u.powf(2.0 / 3.0);
    let exact = 4.0 / 3.0 * u + PI / 2.0 - phase_l(w, 0).unwrap().value;
    assert!((b_series(u, 3).unwrap() - exact).abs() < 1e-6);
}

#[test]
fn truncation_error_improves_with_order() {
    for i in 0..=35 {
        let w = 5.0 + i as f64;
        let exact = phase_l(w, 0).unwrap().value;
        let mut prev = f64::INFINITY;
        for order in 1..=6 {
            let e = (phase_l(w, order).unwrap().value - exact).abs();
            assert!(e <= prev * (1.0 + 1e-6) + 1e-12, "ω = {w}, order {order}: {e} > {prev}");
            prev = e;
        }
    }
}

