use glancing_phase::*;

fn eps() -> Vec<f64> {
    (0..5).map(|k| 10f64.powf(-1.0 - 0.5 * k as f64)).collect()
}

fn jets(m: &MetricJet) -> Vec<PhaseJet> {
    [1.0, -1.0].iter().map(|&w| PhaseJet::build(m, w, &symmetric_grid(0.2, 20)).unwrap()).collect()
}

#[test]
fn flat_boundary_is_exact() {
    let m = MetricJet::named("friedlander").unwrap();
    let r = verify_generating_function(&m, &jets(&m), &eps(), 40, 1).unwrap();
    assert!(r.exact && r.passed);
    assert!(r.max_residual <= 1e-12);
}

#[test]
fn test_metric_reaches_order_four() {
    let m = MetricJet::named("test").unwrap();
    let r = verify_generating_function(&m, &jets(&m), &eps(), 60, 2).unwrap();
    let s = r.slope.unwrap();
    assert!(r.passed && s >= SLOPE_THRESHOLD, "slope {s}");
}

#[test]
fn another_admissible_metric() {
    let m = MetricJet::polynomial("cubic", &[1.0, 0.0, 0.7, -0.4], &[1.3, 0.5, 0.2]).unwrap();
    let r = verify_generating_function(&m, &jets(&m), &eps(), 60, 3).unwrap();
    assert!(r.passed, "slope {:?}", r.slope);
}

#[test]
fn zeroed_gamma_loses_an_order() {
    let m = MetricJet::named("test").unwrap();
    let bad: Vec<PhaseJet> = jets(&m).iter().map(|j| j.with_gamma_zeroed()).collect();
    let r = verify_generating_function(&m, &bad, &eps(), 60, 2).unwrap();
    assert!(!r.passed);
    assert!(r.slope.unwrap() < 3.5);
}

#[test]
fn beta_half_gamma_loses_an_order() {
    let m = MetricJet::named("test").unwrap();
    let alt: Vec<PhaseJet> = jets(&m).iter().map(|j| j.with_beta_factor(0.5)).collect();
    let r = verify_generating_function(&m, &alt, &eps(), 60, 2).unwrap();
    assert!(r.slope.unwrap() < 3.5);
}

#[test]
fn seeds_are_reproducible() {
    let m = MetricJet::named("test").unwrap();
    let j = jets(&m);
    let a = verify_generating_function(&m, &j, &eps(), 10, 9).unwrap();
    let b = verify_generating_function(&m, &j, &eps(), 10, 9).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rejects_bad_eps() {
    let m = MetricJet::named("test").unwrap();
    assert!(verify_generating_function(&m, &jets(&m), &[0.01, 0.1], 5, 0).is_err());
    let other = MetricJet::named("friedlander").unwrap();
    assert!(verify_generating_function(&other, &jets(&m), &eps(), 5, 0).is_err());
}
