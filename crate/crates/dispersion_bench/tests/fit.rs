use dispersion_bench::*;
use model_domain::WaveParams;

fn params(h: f64, a: f64) -> WaveParams {
    WaveParams::isotropic_2d(h, a).unwrap()
}

#[test]
fn exact_power_law() {
    let p = params(2f64.powi(-10), 0.25);
    let t: Vec<f64> = (0..8).map(|i| 0.01 * 1.5f64.powi(i)).collect();
    let sup: Vec<f64> = t.iter().map(|&t| 3.7 * (p.h / t).sqrt()).collect();
    let f = fit_decay_exponent(&DecayFit::from_samples(&p, t, sup), Window::All).unwrap();
    assert!((f.fitted_exponent.unwrap() - 0.5).abs() <= 1e-6);
    assert!(f.fit_residual.unwrap() <= 1e-9);
    assert_eq!(f.regime, vec![Regime::Free]);
}

#[test]
fn short_window_is_rejected() {
    let p = params(2f64.powi(-10), 0.25);
    let t = vec![0.1, 0.2, 0.3, 0.4, 0.5];
    let sup = vec![5.0, 4.0, 3.0, 2.0, 1.0];
    assert!(matches!(fit_decay_exponent(&DecayFit::from_samples(&p, t, sup), Window::All), Err(BenchError::Domain(_))));
}

#[test]
fn nonpositive_sup_is_rejected() {
    let p = params(2f64.powi(-10), 0.25);
    let t: Vec<f64> = (1..=6).map(|i| 0.1 * i as f64).collect();
    let sup = vec![1.0, 1.0, 0.0, 1.0, 1.0, 1.0];
    assert!(fit_decay_exponent(&DecayFit::from_samples(&p, t, sup), Window::All).is_err());
}

#[test]
fn regime_labels() {
    let h = 2f64.powi(-10);
    assert_eq!(classify(0.25, h), vec![Regime::QuarterLoss]);
    assert_eq!(classify(h.powf(0.4), h), vec![Regime::QuarterLoss, Regime::ThirdLoss]);
    assert_eq!(classify(1e-6, h), vec![Regime::ThirdLoss]);
}

#[test]
fn free_window_stops_at_the_first_rise() {
    let p = params(2f64.powi(-10), 0.25);
    let t: Vec<f64> = (0..12).map(|i| 0.02 * 1.4f64.powi(i)).collect();
    let mut sup: Vec<f64> = t.iter().map(|&t| (p.h / t).sqrt()).collect();
    for (i, v) in sup.iter_mut().enumerate().skip(8) {
        *v *= 1.0 + (i - 7) as f64;
    }
    let (onset, peak) = first_reflection(&t, &sup).unwrap();
    assert_eq!(onset, t[7]);
    assert_eq!(peak, t[11]);
    let scan = DecayFit::from_samples(&p, t.clone(), sup);
    let f = fit_decay_exponent(&scan, Window::Free).unwrap();
    assert_eq!(f.fit_samples, (0..8).collect::<Vec<_>>());
    assert!((f.fitted_exponent.unwrap() - 0.5).abs() < 1e-9);
    assert_eq!(f.regime, vec![Regime::Free]);
    let all = fit_decay_exponent(&scan, Window::All).unwrap();
    assert_eq!(all.regime, vec![Regime::QuarterLoss]);
}

#[test]
fn caustic_window_picks_degenerate_times() {
    let p = params(2f64.powi(-10), 0.25);
    let tn: Vec<f64> = (1..=6).map(|n| wavefront_caustics::degenerate_point(&p, n, &[1.0]).unwrap().t_n).collect();
    let mut t = tn.clone();
    t.extend([0.5, 1.0, 3.0]);
    let sup: Vec<f64> = t.iter().map(|&t| 2.0 * (p.h / t).powf(0.25)).collect();
    let f = fit_decay_exponent(&DecayFit::from_samples(&p, t, sup), Window::AtCaustics).unwrap();
    assert_eq!(f.fit_samples, (0..6).collect::<Vec<_>>());
    assert!((f.fitted_exponent.unwrap() - 0.25).abs() < 1e-9);
}

#[test]
fn envelope_constants_of_the_lower_law() {
    let (h, a) = (2f64.powi(-10), 0.25);
    let p = params(h, a);
    let t: Vec<f64> = (1..=6).map(|n| 4.0 * n as f64 * a.sqrt()).collect();
    let sup: Vec<f64> = t.iter().map(|&t| 0.3 * a.powf(0.25) * h.powi(-2) * (h / t).powf(0.25)).collect();
    let e = envelope_fit(&DecayFit::from_samples(&p, t, sup)).unwrap();
    assert!((e.lower - 0.3).abs() < 1e-12);
    assert!(e.lower_ratios.iter().all(|r| (r - 0.3).abs() < 1e-12));
    assert!(e.upper < e.lower);
}

#[test]
fn fit_report_serializes() {
    let p = params(2f64.powi(-10), 0.25);
    let t: Vec<f64> = (0..6).map(|i| 0.05 + 0.05 * i as f64).collect();
    let sup: Vec<f64> = t.iter().map(|&t| 1.0 / t).collect();
    let f = fit_decay_exponent(&DecayFit::from_samples(&p, t, sup), Window::All).unwrap();
    let back: DecayFit = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
    assert_eq!(back.fitted_exponent, f.fitted_exponent);
    assert_eq!(back.window, Some(Window::All));
}
