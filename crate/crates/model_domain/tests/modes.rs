use airy_kernel::airy_zeros;
use model_domain::*;
use proptest::prelude::*;
use quadrature::{panels, Rule};

fn table() -> airy_kernel::AiryZeroTable {
    airy_zeros(40).unwrap()
}

#[test]
fn quadratic_form_examples() {
    assert_eq!(QForm::identity(1).eval(&[1.0]).unwrap(), 1.0);
    let q = QForm::new(vec![vec![1.0, 0.0], vec![0.0, 4.0]]).unwrap();
    assert_eq!(q.eval(&[1.0, 1.0]).unwrap(), 5.0);
    assert_eq!(QForm::identity(1).eval(&[0.0]).unwrap(), 0.0);
    assert!(q.eval(&[1.0]).is_err());
    assert!(QForm::new(vec![vec![1.0, 2.0], vec![2.0, 1.0]]).is_err());
    assert!(QForm::new(vec![vec![1.0, 0.5], vec![0.4, 1.0]]).is_err());
}

#[test]
fn eigenvalue_examples() {
    let t = table();
    let q = QForm::identity(1);
    let l1 = lambda_k(1, &[1.0], &q, &t).unwrap();
    assert!((l1 - 3.3381074105).abs() < 1e-9);
    let eta = [0.7];
    let l2 = lambda_k(2, &eta, &q, &t).unwrap();
    let l5 = lambda_k(5, &eta, &q, &t).unwrap();
    assert!(l2 < l5 && l2 > 0.49);
    let twice = lambda_k(3, &[1.4], &q, &t).unwrap();
    let expected = 4.0 * 0.49 + t.zeros[2] * 2f64.powf(4.0 / 3.0) * 0.49f64.powf(2.0 / 3.0);
    assert!((twice - expected).abs() < 1e-12);
    assert!(lambda_k(41, &eta, &q, &t).is_err());
    assert!(lambda_k(1, &[0.0], &q, &t).is_err());
}

#[test]
fn rho_and_tau() {
    let q = QForm::new(vec![vec![2.0, 0.3], vec![0.3, 1.0]]).unwrap();
    let th = [0.6, -0.8];
    assert!((rho(0.0, &th, &q).unwrap() - 1.0).abs() < 1e-15);
    assert!(rho(0.2, &th, &q).unwrap() < rho(0.3, &th, &q).unwrap());
    let h: f64 = 2f64.powi(-7);
    let omega = 3.7;
    let eta = [th[0] / h, th[1] / h];
    let lhs = tau(omega, &eta, &q).unwrap();
    let rhs = rho(h.powf(2.0 / 3.0) * omega, &th, &q).unwrap() / h;
    assert!((lhs - rhs).abs() < 1e-12 * lhs);
}

fn overlap(j: usize, k: usize, eta: &[f64], q: &QForm, t: &airy_kernel::AiryZeroTable) -> f64 {
    let s = q.eval(eta).unwrap().cbrt();
    let top = (t.zeros[j.max(k) - 1] + 12.0) / s;
    let rule = Rule::new(16);
    panels(0.0, top, |_| 0.5 / s)
        .iter()
        .map(|p| {
            rule.integrate(p.a, p.b, |x| {
                mode_eval(j, x, eta, q, t).unwrap() * mode_eval(k, x, eta, q, t).unwrap()
            })
        })
        .sum()
}

#[test]
fn orthonormal_on_half_line() {
    let t = table();
    let q = QForm::identity(1);
    for eta in [0.8, 1.0, 1.25] {
        for k in 1..=30 {
            let n = overlap(k, k, &[eta], &q, &t);
            assert!((n - 1.0).abs() < 1e-8, "k = {k}, |η| = {eta}: {n}");
        }
    }
    assert!(overlap(1, 2, &[1.0], &q, &t).abs() < 1e-8);
}

#[test]
fn dirichlet_at_boundary() {
    let t = table();
    let q = QForm::identity(1);
    for k in 1..=30 {
        let sup = (0..400)
            .map(|i| mode_eval(k, i as f64 * 0.05, &[1.0], &q, &t).unwrap().abs())
            .fold(0.0, f64::max);
        assert!(mode_eval(k, 0.0, &[1.0], &q, &t).unwrap().abs() <= 1e-12 * sup);
    }
    assert!(mode_eval(1, -0.1, &[1.0], &q, &t).is_err());
}

#[test]
fn eigen_residual_fourth_order() {
    let t = table();
    let q = QForm::new(vec![vec![1.5, 0.2], vec![0.2, 0.7]]).unwrap();
    let eta = [0.9, -0.4];
    let qv = q.eval(&eta).unwrap();
    let e2 = eta[0] * eta[0] + eta[1] * eta[1];
    for k in [1, 4, 12] {
        let lam = lambda_k(k, &eta, &q, &t).unwrap();
        let top = (t.zeros[k - 1] + 8.0) / qv.cbrt();
        let n = 4000;
        let dx = top / n as f64;
        let e = |x: f64| mode_eval(k, x.max(0.0), &eta, &q, &t).unwrap();
        let (mut num, mut den) = (0.0, 0.0);
        for i in 2..n - 2 {
            let x = i as f64 * dx;
            let d2 = (-e(x + 2.0 * dx) + 16.0 * e(x + dx) - 30.0 * e(x) + 16.0 * e(x - dx) - e(x - 2.0 * dx))
                / (12.0 * dx * dx);
            let r = -d2 + (e2 + x * qv) * e(x) - lam * e(x);
            num += r * r;
            den += e(x) * e(x);
        }
        assert!((num / den).sqrt() < 1e-6, "k = {k}: {}", (num / den).sqrt());
    }
}

#[test]
fn window_and_params() {
    let p = WaveParams::isotropic_2d(2f64.powi(-6), 0.25).unwrap();
    assert_eq!(p.window(&[1.0]), 1.0);
    assert_eq!(p.window(&[-0.79]), 0.0);
    assert_eq!(p.window(&[1.21]), 0.0);
    assert_eq!(p.window(&[0.9]), p.window(&[-0.9]));
    assert!(WaveParams::new(4, 0.1, 0.1, 0.2, QForm::identity(3)).is_err());
    assert!(WaveParams::new(2, 0.0, 0.1, 0.2, QForm::identity(1)).is_err());
    assert!(WaveParams::new(2, 0.1, 0.1, 0.3, QForm::identity(1)).is_err());
    assert!(WaveParams::new(3, 0.1, 0.1, 0.2, QForm::identity(1)).is_err());
    let c = AlphaCutoff::default();
    assert_eq!(c.eval(0.5), 1.0);
    assert_eq!(c.eval(1.6), 0.0);
    assert!(c.eval(1.2) > c.eval(1.3));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn random_overlaps(j in 1usize..=20, k in 1usize..=20, eta in 0.8f64..1.25) {
        let t = table();
        let q = QForm::identity(1);
        let v = overlap(j, k, &[eta], &q, &t);
        let expect = if j == k { 1.0 } else { 0.0 };
        prop_assert!((v - expect).abs() < 1e-8);
    }
}
