//! Ai, Ai′, Bi, Bi′ on the real line.
//!
//! Three regions: oscillatory asymptotics for x < -9, Poincaré asymptotics
//! for x > 9, and Taylor expansion about anchors spaced 0.5 apart in
//! between. The anchors are generated once from the exact values at 0
//! (Bi and the negative side) and from the asymptotic value at 12 stepped
//! backward (Ai on the positive side, where forward stepping is unstable).

use std::f64::consts::{FRAC_PI_4, PI};
use std::sync::OnceLock;

pub(crate) const AI0: f64 = 0.355_028_053_887_817_239;
pub(crate) const AIP0: f64 = -0.258_819_403_792_806_798;
const SQRT3: f64 = 1.732_050_807_568_877_293;
const SWITCH: f64 = 9.0;
const ANCHOR_STEP: f64 = 0.5;

/// All four real Airy functions at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryFull {
    pub x: f64,
    pub ai: f64,
    pub aip: f64,
    pub bi: f64,
    pub bip: f64,
}

impl AiryFull {
    pub fn wronskian(&self) -> f64 {
        self.ai * self.bip - self.aip * self.bi
    }
}

/// Partial sums Σ u_k s^k ζ^{-k} and Σ v_k s^k ζ^{-k}, with `s = -1`
/// when `alternate` is set.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AsymSums {
    pub u: f64,
    pub v: f64,
}

pub(crate) fn asym_sums(zeta: f64, alternate: bool) -> AsymSums {
    let mut tu = 1.0;
    let mut s = AsymSums { u: 1.0, v: 1.0 };
    let mut prev = f64::INFINITY;
    for k in 1..80usize {
        let kf = k as f64;
        let r = (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        tu *= r / zeta;
        if alternate {
            tu = -tu;
        }
        let tv = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * tu;
        if tu.abs() > prev {
            break;
        }
        prev = tu.abs();
        s.u += tu;
        s.v += tv;
        if tu.abs() < 1e-18 {
            break;
        }
    }
    s
}

/// Returns `(zeta, P, Q, R, S)`, the auxiliary series of the oscillatory
/// form for Ai(-w), Ai'(-w), Bi(-w), Bi'(-w), with w > 0 large.
pub(crate) fn oscillatory_pqrs(w: f64) -> (f64, f64, f64, f64, f64) {
    let zeta = 2.0 / 3.0 * w * w.sqrt();
    let mut p = 1.0;
    let mut q = 0.0;
    let mut r = 1.0;
    let mut s = 0.0;
    let mut t = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..80usize {
        let kf = k as f64;
        let ratio = (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        t *= ratio / zeta;
        if t > prev {
            break;
        }
        prev = t;
        let tv = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * t;
        // signs (-1)^{floor(k/2)}
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * t;
            r += sign * tv;
        } else {
            q += sign * t;
            s += sign * tv;
        }
        if t < 1e-18 {
            break;
        }
    }
    (zeta, p, q, r, s)
}

fn oscillatory(x: f64) -> AiryFull {
    let w = -x;
    let (zeta, p, q, r, s) = oscillatory_pqrs(w);
    let (sn, cs) = (zeta - FRAC_PI_4).sin_cos();
    let w4 = w.powf(0.25);
    let c = 1.0 / PI.sqrt();
    AiryFull {
        x,
        ai: c / w4 * (cs * p + sn * q),
        bi: c / w4 * (-sn * p + cs * q),
        aip: c * w4 * (sn * r - cs * s),
        bip: c * w4 * (cs * r + sn * s),
    }
}

/// Poincaré form for x > 9. Bi overflows past x ≈ 104 and is returned as
/// infinity there; Ai underflows to 0 at about the same point.
fn exponential(x: f64) -> AiryFull {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let dec = asym_sums(zeta, true);
    let inc = asym_sums(zeta, false);
    let x4 = x.powf(0.25);
    let c = 1.0 / PI.sqrt();
    let e = (-zeta).exp();
    let g = zeta.exp();
    AiryFull {
        x,
        ai: 0.5 * c / x4 * e * dec.u,
        aip: -0.5 * c * x4 * e * dec.v,
        bi: c / x4 * g * inc.u,
        bip: c * x4 * g * inc.v,
    }
}

/// `Ai(x)/Bi(x)` for x > 9 without overflow.
pub(crate) fn ai_over_bi(x: f64) -> f64 {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let dec = asym_sums(zeta, true);
    let inc = asym_sums(zeta, false);
    0.5 * (-2.0 * zeta).exp() * dec.u / inc.u
}

/// Taylor step of the pair (y, y′) for y″ = x y from `x0` by `t`.
fn taylor(x0: f64, y: f64, yp: f64, t: f64) -> (f64, f64) {
    // a_{n+2} (n+2)(n+1) = x0 a_n + a_{n-1}
    let mut a_nm1 = 0.0;
    let mut a_n = y;
    let mut a_np1 = yp;
    let mut val = y + yp * t;
    let mut der = yp;
    let mut tp = t; // t^{n+1}
    let scale = y.abs() + yp.abs() + 1e-300;
    let mut small = 0;
    let mut n = 0usize;
    loop {
        let a_np2 = (x0 * a_n + a_nm1) / ((n as f64 + 2.0) * (n as f64 + 1.0));
        der += (n as f64 + 2.0) * a_np2 * tp;
        tp *= t;
        let term = a_np2 * tp;
        val += term;
        a_nm1 = a_n;
        a_n = a_np1;
        a_np1 = a_np2;
        n += 1;
        if term.abs() < 1e-19 * scale {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
        if n > 120 {
            break;
        }
    }
    (val, der)
}

struct Anchors {
    /// Index i corresponds to x = -SWITCH + i * ANCHOR_STEP.
    rows: Vec<[f64; 4]>,
}

fn anchors() -> &'static Anchors {
    static CELL: OnceLock<Anchors> = OnceLock::new();
    CELL.get_or_init(|| {
        let n = (2.0 * SWITCH / ANCHOR_STEP).round() as usize + 1;
        let mid = n / 2;
        let mut rows = vec![[0.0; 4]; n];
        let x_of = |i: usize| -SWITCH + i as f64 * ANCHOR_STEP;
        let bi0 = SQRT3 * AI0;
        let bip0 = -SQRT3 * AIP0;
        rows[mid] = [AI0, AIP0, bi0, bip0];
        // Bi forward on the positive side.
        for i in mid + 1..n {
            let [_, _, b, bp] = rows[i - 1];
            let (nb, nbp) = taylor(x_of(i - 1), b, bp, ANCHOR_STEP);
            rows[i][2] = nb;
            rows[i][3] = nbp;
        }
        // Ai backward on the positive side, started from the asymptotic value at 12.
        let start = 12.0;
        let e = exponential(start);
        let (mut y, mut yp) = (e.ai, e.aip);
        let mut x = start;
        while x > SWITCH + 1e-9 {
            let (ny, nyp) = taylor(x, y, yp, -ANCHOR_STEP);
            y = ny;
            yp = nyp;
            x -= ANCHOR_STEP;
        }
        rows[n - 1][0] = y;
        rows[n - 1][1] = yp;
        for i in (mid..n - 1).rev() {
            let [a, ap, _, _] = rows[i + 1];
            let (na, nap) = taylor(x_of(i + 1), a, ap, -ANCHOR_STEP);
            if i == mid {
                // The exact value at 0 is kept; the stepped one only cross-checks.
                debug_assert!((na - AI0).abs() < 1e-13, "Ai anchor drift {}", na - AI0);
                continue;
            }
            rows[i][0] = na;
            rows[i][1] = nap;
        }
        // Both functions forward into the oscillatory side.
        for i in (0..mid).rev() {
            let [a, ap, b, bp] = rows[i + 1];
            let (na, nap) = taylor(x_of(i + 1), a, ap, -ANCHOR_STEP);
            let (nb, nbp) = taylor(x_of(i + 1), b, bp, -ANCHOR_STEP);
            rows[i] = [na, nap, nb, nbp];
        }
        Anchors { rows }
    })
}

fn anchored(x: f64) -> AiryFull {
    let tab = anchors();
    let i = ((x + SWITCH) / ANCHOR_STEP).round() as usize;
    let i = i.min(tab.rows.len() - 1);
    let x0 = -SWITCH + i as f64 * ANCHOR_STEP;
    let t = x - x0;
    let [a, ap, b, bp] = tab.rows[i];
    let (ai, aip) = taylor(x0, a, ap, t);
    let (bi, bip) = taylor(x0, b, bp, t);
    AiryFull { x, ai, aip, bi, bip }
}

/// Ai, Ai′, Bi, Bi′ at a finite real point.
pub(crate) fn full(x: f64) -> AiryFull {
    if x < -SWITCH {
        oscillatory(x)
    } else if x > SWITCH {
        exponential(x)
    } else {
        anchored(x)
    }
}

/// Rough absolute error estimate for the returned Ai value.
pub(crate) fn ai_error_estimate(f: &AiryFull) -> f64 {
    let x = f.x;
    let scale = if x < 0.0 {
        (f.ai * f.ai + f.bi * f.bi).sqrt()
    } else {
        f.ai.abs()
    };
    let rel = if x.abs() > SWITCH { 4e-16 } else { 2e-15 };
    rel * scale.max(1e-300)
}
