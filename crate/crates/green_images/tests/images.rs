use green_images::*;
use green_spectral::{spectral_green, Axis, Grid};
use model_domain::WaveParams;

fn grid(h: f64, ts: Vec<f64>, xs: Vec<f64>) -> Grid {
    Grid::new(Axis::points(ts), Axis::points(xs), vec![Axis::covering(-1.0, 1.0, h / 8.0)])
}

#[test]
fn reflected_sum_matches_spectral_sum() {
    let p = WaveParams::isotropic_2d(2f64.powi(-6), 0.25).unwrap();
    let g = grid(p.h, vec![0.1, 0.6, 1.0], vec![0.0, 0.15, 0.3, 0.5]);
    let r = equivalence_check(&p, &g, None, None).unwrap();
    assert!(r.rel_linf <= 1e-3, "{}", r.rel_linf);
}

#[test]
fn free_wave_dominates_before_reflection() {
    let p = WaveParams::isotropic_2d(2f64.powi(-8), 0.25).unwrap();
    let g = grid(p.h, vec![0.2], vec![0.15, 0.25, 0.35]);
    let v0 = v_n_field(&p, 0, &g).unwrap();
    let full = spectral_green(&p, &g, None).unwrap();
    let ratio = v0.field.max_abs() / full.max_abs();
    assert!((ratio - 1.0).abs() < 0.1, "{ratio}");
    // Near-time N = 0 carries the same sup as the single-term equivalence.
    let r = equivalence_check(&p, &g, Some(0), None).unwrap();
    assert!(r.rel_linf < 0.05);
}

#[test]
fn boundary_trace_of_the_sum() {
    let p = WaveParams::isotropic_2d(2f64.powi(-6), 0.25).unwrap();
    let g = grid(p.h, vec![0.4, 0.8], vec![0.0, 0.25]);
    let s = images_green(&p, &g, None, 1e-7).unwrap();
    let max = s.field.max_abs();
    for it in 0..2 {
        for iy in 0..g.y_len() {
            assert!(s.field.at(it, 0, iy).norm() <= 1e-6 * max);
        }
    }
    // Individual terms do not vanish there.
    let v0 = v_n_field(&p, 0, &g).unwrap();
    let trace = (0..g.y_len()).map(|iy| v0.field.at(1, 0, iy).norm()).fold(0.0, f64::max);
    assert!(trace > 1e-3 * max);
}

#[test]
fn source_on_the_boundary_gives_zero() {
    let p = WaveParams::isotropic_2d(2f64.powi(-6), 0.0).unwrap();
    let g = grid(p.h, vec![0.3], vec![0.1, 0.3]);
    let spec = spectral_green(&p, &g, None).unwrap();
    let img = images_green(&p, &g, Some(16), 1e-4).unwrap();
    let v0 = v_n_field(&p, 0, &g).unwrap().field.max_abs();
    assert!(spec.max_abs() < 1e-10 * v0);
    assert!(img.field.max_abs() < 1e-5 * v0, "{}", img.field.max_abs() / v0);
}

#[test]
fn energies_fall_off_the_contributing_set() {
    let p = WaveParams::isotropic_2d(2f64.powi(-6), 0.25).unwrap();
    let g = grid(p.h, vec![0.5], vec![0.1, 0.25, 0.4]);
    let s = images_green(&p, &g, Some(6), 1e-4).unwrap();
    let sup = |n: i64| s.energies.iter().find(|e| e.n == n).unwrap().sup;
    let dominant = sup(0).max(sup(1));
    for n in [3, 4, 5, 6, -2, -3, -4, -5, -6] {
        assert!(sup(n) < 1e-3 * dominant, "N = {n}: {}", sup(n));
    }
}
