use dispersion_bench::*;
use model_domain::WaveParams;

fn params(h: f64, a: f64) -> WaveParams {
    WaveParams::isotropic_2d(h, a).unwrap()
}

fn opts(x_step: f64) -> ScanOptions {
    ScanOptions { x_step, ..ScanOptions::default() }
}

#[test]
fn spectral_and_images_agree() {
    let p = params(2f64.powi(-6), 0.25);
    let bx = ScanBox { x: (0.24, 0.26), y: YRange::Fixed(0.045, 0.05), mask: MASK_C0 };
    let o = ScanOptions { max_refine: 0, ..opts(2.0) };
    let s = sup_scan(&p, &[0.1], &bx, Method::Spectral, &o).unwrap();
    let i = sup_scan(&p, &[0.1], &bx, Method::Images, &o).unwrap();
    assert!((s.sup_values[0] - i.sup_values[0]).abs() <= 1e-8 * s.sup_values[0]);
    assert_eq!(s.argmax, i.argmax);
}

#[test]
fn halving_h_in_the_free_window() {
    let a = 0.25;
    let bx = ScanBox { x: (a - 0.13, a + 0.13), y: YRange::Shell(1.25), mask: MASK_C0 };
    let sup = |k: i32| {
        let s = sup_scan(&params(2f64.powi(-k), a), &[0.1], &bx, Method::Spectral, &opts(4.0)).unwrap();
        assert!(s.warnings.is_empty(), "{:?}", s.warnings);
        s.sup_values[0]
    };
    let ratio = sup(9) / sup(8);
    assert!((ratio / 2f64.powf(1.5) - 1.0).abs() < 0.05, "ratio {ratio}");
}

#[test]
fn caustic_maximizer_sits_near_the_boundary_layer() {
    let a = 0.25;
    let p = params(2f64.powi(-8), a);
    let c = caustic_scan(&p, &[1], (0.0, 2.0 * a), 0.1, Method::Spectral, &opts(4.0)).unwrap();
    assert_eq!(c.caustic, vec![Some(1)]);
    let t1 = wavefront_caustics::degenerate_point(&p, 1, &[1.0]).unwrap().t_n;
    assert!(c.t_samples[0] > t1);
    assert!((c.argmax[0][0] - a).abs() <= 0.5 * a);
    let f = fit_decay_exponent(&c, Window::AtCaustics);
    assert!(matches!(f, Err(BenchError::Domain(_))));
}

#[test]
fn bad_requests() {
    let p = params(2f64.powi(-6), 0.25);
    let bx = ScanBox::shell(&p, 1.25);
    assert!(matches!(sup_scan(&p, &[p.h / 2.0], &bx, Method::Spectral, &opts(4.0)), Err(BenchError::Domain(_))));
    assert!(sup_scan(&p, &[0.1], &bx, Method::Supplied, &opts(4.0)).is_err());
    assert!(caustic_scan(&p, &[], (0.0, 0.5), 0.1, Method::Spectral, &opts(4.0)).is_err());
}
