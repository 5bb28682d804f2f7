use model_domain::WaveParams;
use wavefront_caustics::*;

fn params(h: f64, a: f64) -> WaveParams {
    WaveParams::isotropic_2d(h, a).unwrap()
}

#[test]
fn third_caustic_time() {
    let p = params(2f64.powi(-18), 0.01);
    let ev = caustic_locate(&p, 3).unwrap();
    assert!((ev.t_n / 1.2 - 1.0).abs() < 0.02, "{}", ev.t_n);
    assert!((ev.x_n - 0.01).abs() < 1e-12);
    assert!(!ev.b_prime_dropped);
}

#[test]
fn degeneracy_certificate() {
    for (h, a) in [(2f64.powi(-18), 0.01), (2f64.powi(-10), 0.25), (2f64.powi(-9), 0.25)] {
        let p = params(h, a);
        for n in 1..=max_reflection(&p) as i64 {
            let ev = caustic_locate(&p, n).unwrap();
            assert!(ev.hessian_residual <= 1e-8);
            assert!(ev.gradient_residual <= 1e-10);
            // s ↔ ϱ symmetry at x = a kills the cubic term; the quartic one survives.
            assert!(ev.third_derivative.abs() <= 1e-8);
            assert!(ev.quartic_coefficient.abs() > 0.1);
        }
    }
}

#[test]
fn analytic_hessian_matches_differences() {
    let p = params(2f64.powi(-10), 0.25);
    let ev = caustic_locate(&p, 2).unwrap();
    let ph = ModelPhase::new(&p, 2, &[1.0], LModel::for_omega(0.25 * 2f64.powf(20.0 / 3.0))).unwrap();
    let mut z = ev.phase_point;
    z.s += 0.03;
    z.varrho -= 0.02;
    z.alpha += 0.01;
    let e = 1e-4;
    let shift = |p: &PhasePoint, i: usize, d: f64| {
        let mut q = *p;
        match i {
            0 => q.s += d,
            1 => q.varrho += d,
            _ => q.alpha += d,
        }
        q
    };
    let hess = ph.hessian(&z);
    for i in 0..3 {
        for j in 0..3 {
            let f = |di: f64, dj: f64| ph.value(&shift(&shift(&z, i, di), j, dj));
            let fd = (f(e, e) - f(e, -e) - f(-e, e) + f(-e, -e)) / (4.0 * e * e);
            assert!((fd - hess[i][j]).abs() < 1e-4 * (1.0 + hess[i][j].abs()), "{i}{j}: {fd} vs {}", hess[i][j]);
        }
    }
}

#[test]
fn times_increase_and_follow_the_bounce_law() {
    let p = params(2f64.powi(-18), 0.01);
    let mut last = 0.0;
    for n in 1..=5 {
        let ev = caustic_locate(&p, n).unwrap();
        let law = 4.0 * n as f64 * 0.1;
        assert!((ev.t_n - law).abs() / law <= 0.2);
        assert!(ev.t_n > last);
        last = ev.t_n;
    }
}

#[test]
fn amplitude_exponent_arithmetic() {
    let p = params(2f64.powi(-20), 0.01);
    let t = 1.0;
    let r = amplitude_law(&p, 4, 4.0 * t) / amplitude_law(&p, 1, t);
    assert!((r - 4f64.powf(-0.25)).abs() < 1e-14);
    let p3 = WaveParams::new(3, p.h, p.a, 0.2, model_domain::QForm::identity(2)).unwrap();
    let r3 = amplitude_law(&p3, 4, 4.0 * t) / amplitude_law(&p3, 1, t);
    assert!((r3 - 0.5f64.sqrt() * 0.5).abs() < 1e-14);
}

#[test]
fn reflection_range() {
    let p = params(2f64.powi(-10), 0.01);
    assert_eq!(max_reflection(&p), 1);
    assert!(matches!(caustic_locate(&p, 2), Err(CausticError::Domain(_))));
    assert!(matches!(caustic_locate(&p, 0), Err(CausticError::Domain(_))));
}
