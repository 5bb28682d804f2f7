use std::f64::consts::PI;

use airy_kernel::{airy, airy_zeros};
use green_spectral::*;
use model_domain::{QForm, WaveParams};
use num_complex::Complex64;
use quadrature::{panels, Bump, Rule};

fn params(e: i32) -> WaveParams {
    WaveParams::isotropic_2d(2f64.powi(-e), 0.25).unwrap()
}

fn small_grid(h: f64, ts: Vec<f64>) -> Grid {
    Grid::new(Axis::points(ts), Axis::points(vec![0.0, 0.1, 0.25, 0.4]), vec![Axis::covering(-0.8, 0.8, h / 8.0)])
}

#[test]
fn dirichlet_trace_vanishes() {
    let p = params(6);
    let f = spectral_green(&p, &small_grid(p.h, vec![0.0, 0.3, 0.7]), None).unwrap();
    let max = f.max_abs();
    for it in 0..3 {
        for iy in 0..f.grid.y_len() {
            assert!(f.at(it, 0, iy).norm() <= 1e-10 * max);
        }
    }
}

#[test]
fn real_at_time_zero_and_time_reversible() {
    let p = params(6);
    let f = spectral_green(&p, &small_grid(p.h, vec![0.0, -0.4, 0.4]), None).unwrap();
    let max = f.max_abs();
    for ix in 0..4 {
        for iy in 0..f.grid.y_len() {
            assert!(f.at(0, ix, iy).im.abs() <= 1e-10 * max);
            let back = f.at(1, ix, iy);
            let fwd = f.at(2, ix, iy);
            assert!((back - fwd.conj()).norm() <= 1e-12 * max);
        }
    }
}

#[test]
fn truncation_beyond_cutoff_is_inert() {
    let p = params(6);
    let g = small_grid(p.h, vec![0.5]);
    let full = spectral_green(&p, &g, None).unwrap();
    let k = full.truncation.k_max.unwrap();
    let doubled = spectral_green(&p, &g, Some(2 * k)).unwrap();
    assert!(doubled.rel_linf_distance(&full).unwrap() <= 1e-9);
    let cut = spectral_green(&p, &g, Some(k / 2)).unwrap();
    let err = cut.rel_linf_distance(&full).unwrap() * full.max_abs();
    assert!(cut.truncation.tail_estimate >= err * 0.999, "{} vs {err}", cut.truncation.tail_estimate);
}

#[test]
fn rejects_bad_inputs() {
    let p = params(6);
    let coarse = Grid::new(Axis::points(vec![0.1]), Axis::points(vec![0.2]), vec![Axis::covering(-0.5, 0.5, p.h)]);
    assert!(matches!(spectral_green(&p, &coarse, None), Err(FieldError::Config(_))));
    let g = small_grid(p.h, vec![0.1]);
    assert!(matches!(spectral_green(&p, &g, Some(200_000)), Err(FieldError::Domain(_))));
    let neg = Grid::new(Axis::points(vec![0.1]), Axis::points(vec![-0.1]), vec![Axis::points(vec![0.0])]);
    assert!(matches!(spectral_green(&p, &neg, None), Err(FieldError::Domain(_))));
}

/// Single-mode field at one point by adaptive-free dense Gauss–Legendre in θ,
/// independent of the lattice used by the library.
fn one_mode_oracle(p: &WaveParams, t: f64, x: f64, y: f64) -> Complex64 {
    let z = airy_zeros(1).unwrap();
    let (w1, lp1) = (z.zeros[0], z.lprimes[0]);
    let h = p.h;
    let h23 = h.powf(2.0 / 3.0);
    let chi = p.cutoff.eval(h23 * w1);
    let rule = Rule::new(20);
    let mut s = Complex64::new(0.0, 0.0);
    for (lo, hi) in [(-1.2, -0.8), (0.8, 1.2)] {
        for pan in panels(lo, hi, |_| h / 10.0) {
            for (th, wt) in rule.nodes_on(pan.a, pan.b) {
                let mu = th.abs().powf(2.0 / 3.0) / h23;
                let rho = (th * th + h23 * w1 * th.abs().powf(4.0 / 3.0)).sqrt();
                let amp = p.window(&[th]) * chi * 2.0 * PI / lp1
                    * mu
                    * airy(mu * x - w1).unwrap().ai
                    * airy(mu * p.a - w1).unwrap().ai;
                s += wt * amp * Complex64::from_polar(1.0, (t * rho + y * th) / h);
            }
        }
    }
    s / h
}

#[test]
fn one_mode_matches_dense_quadrature() {
    let p = params(6);
    let g = Grid::new(Axis::points(vec![0.2]), Axis::points(vec![0.25]), vec![Axis::points(vec![-0.2])]);
    let f = spectral_green(&p, &g, Some(1)).unwrap();
    let oracle = one_mode_oracle(&p, 0.2, 0.25, -0.2);
    let v = f.values[0];
    assert!((v - oracle).norm() <= 1e-8 * oracle.norm(), "{v} vs {oracle}");
}

#[test]
fn fft_synthesis_matches_direct() {
    let p = params(6);
    let tg = ThetaGrid::new(&p, 6.0);
    let g: Vec<Complex64> = (0..tg.len())
        .map(|n| Complex64::new(tg.window[n] * (1.0 + 0.3 * n as f64).cos(), (0.7 * n as f64).sin()))
        .collect();
    let (dy, vals) = tg.synthesize_fft(&g, p.h / 8.0);
    assert!(dy <= p.h / 8.0);
    let m = vals.len();
    let picks: Vec<usize> = vec![0, m / 4, m / 2, m / 2 + 17, m - 1];
    let ys: Vec<Vec<f64>> = picks.iter().map(|&k| vec![fft_y(k, m, dy)]).collect();
    let direct = tg.synthesize(&g, &ys);
    for (k, d) in picks.iter().zip(direct) {
        assert!((vals[*k] - d).norm() < 1e-10 * d.norm().max(1.0));
    }
}

#[test]
fn anisotropic_three_dimensional_point() {
    let q = QForm::new(vec![vec![1.0, 0.1], vec![0.1, 0.8]]).unwrap();
    let p = WaveParams::new(3, 2f64.powi(-4), 0.3, 0.2, q).unwrap();
    let g = Grid::new(
        Axis::points(vec![0.0, 0.2]),
        Axis::points(vec![0.0, 0.3]),
        vec![Axis::points(vec![0.0, 0.1]), Axis::points(vec![0.0])],
    );
    let f = spectral_green(&p, &g, None).unwrap();
    let max = f.max_abs();
    assert!(max > 0.0 && max.is_finite());
    assert!(f.at(0, 0, 0).norm() <= 1e-10 * max);
    assert!(f.at(1, 0, 1).norm() <= 1e-10 * max);
}

#[test]
fn delta_recovery() {
    let zero = delta_recovery_test(&params(5), &SeparableTest::zero()).unwrap();
    assert_eq!(zero.discrepancy, 0.0);
    let test = SeparableTest::new(Bump::new(0.25, 0.1), Bump::new(0.0, 0.15));
    let d: Vec<f64> = [5, 6, 7].iter().map(|&e| delta_recovery_test(&params(e), &test).unwrap().discrepancy).collect();
    assert!(d[0] > d[1] && d[1] > d[2], "{d:?}");
    let far = SeparableTest::new(Bump::new(0.6, 0.05), Bump::new(0.0, 0.1));
    let r = delta_recovery_test(&params(7), &far).unwrap();
    assert!(r.pairing.norm() <= 1e-3 * far.sup());
    let near_wall = SeparableTest::new(Bump::new(0.05, 0.04), Bump::new(0.0, 0.1));
    assert!(delta_recovery_test(&params(7), &near_wall).is_err());
}

#[test]
fn csv_and_sidecar() {
    let p = params(5);
    let g = Grid::new(Axis::points(vec![0.1]), Axis::points(vec![0.2]), vec![Axis::points(vec![0.0, 0.01])]);
    let f = spectral_green(&p, &g, None).unwrap();
    let mut buf = Vec::new();
    f.write_csv(&mut buf).unwrap();
    let s = String::from_utf8(buf).unwrap();
    assert!(s.starts_with("t,x,y,re,im\n"));
    assert_eq!(s.lines().count(), 3);
    let side = f.sidecar();
    assert_eq!(side["truncation"]["method"], "spectral");
    assert_eq!(side["params"]["d"], 2);
}
