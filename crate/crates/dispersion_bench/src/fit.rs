use serde::{Deserialize, Serialize};
use wavefront_caustics::degenerate_point;

use crate::error::{BenchError, Result};
use crate::scan::DecayFit;

/// Slack in the regime boundaries on a.
pub const EPSILON: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Window {
    All,
    /// Caustic peak samples, or samples taken at a degenerate time t_N.
    AtCaustics,
    /// Samples before the first reflection onset.
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Free,
    QuarterLoss,
    ThirdLoss,
}

/// Regimes allowed by (a, h) alone. Both losses are returned when a sits
/// in the overlap of the two conditions.
pub fn classify(a: f64, h: f64) -> Vec<Regime> {
    let mut out = Vec::new();
    if a >= h.powf(2.0 / 3.0 - EPSILON) {
        out.push(Regime::QuarterLoss);
    }
    if a <= h.powf(1.0 / 3.0 + EPSILON) {
        out.push(Regime::ThirdLoss);
    }
    out
}

/// `(onset, peak)`: the sample where the initial decay stops and the first
/// local maximum after it. `None` while the scan decays monotonically.
pub fn first_reflection(t: &[f64], sup: &[f64]) -> Option<(f64, f64)> {
    let start = (1..sup.len()).find(|&i| sup[i] < sup[i - 1])?;
    let onset = (start..sup.len()).find(|&i| sup[i] > sup[i - 1])? - 1;
    let mut peak = onset + 1;
    while peak + 1 < sup.len() && sup[peak + 1] >= sup[peak] {
        peak += 1;
    }
    Some((t[onset], t[peak]))
}

/// Degenerate times t_N, N = 1, 2, ..., up to `t_max`, with no reflection
/// range restriction.
fn caustic_times(fit: &DecayFit, t_max: f64) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let dir = [1.0];
    for n in 1.. {
        let ev = degenerate_point(&fit.params, n, &dir)?;
        if ev.t_n > t_max * (1.0 + 1e-6) {
            break;
        }
        out.push(ev.t_n);
    }
    Ok(out)
}

/// Least-squares slope of log sup against log(h/t) over the window.
pub fn fit_decay_exponent(scan: &DecayFit, window: Window) -> Result<DecayFit> {
    let (h, a) = (scan.params.h, scan.params.a);
    let n = scan.t_samples.len();
    if scan.sup_values.len() != n || scan.sup_values.iter().any(|&s| !(s > 0.0)) {
        return Err(BenchError::Domain("sup values must be positive, one per t sample".into()));
    }
    let reflection = first_reflection(&scan.t_samples, &scan.sup_values);
    let idx: Vec<usize> = match window {
        Window::All => (0..n).collect(),
        Window::Free => {
            let end = reflection.map_or(f64::INFINITY, |r| r.0);
            (0..n).filter(|&i| scan.t_samples[i] <= end).collect()
        }
        Window::AtCaustics => {
            let untagged = scan.caustic.iter().filter(|c| c.is_none()).count();
            let t_max = (0..n).filter(|&i| scan.caustic[i].is_none()).fold(0.0f64, |m, i| m.max(scan.t_samples[i]));
            let tn = if untagged > 0 { caustic_times(scan, t_max)? } else { Vec::new() };
            (0..n)
                .filter(|&i| scan.caustic[i].is_some() || tn.iter().any(|&c| (scan.t_samples[i] - c).abs() <= 1e-6 * c))
                .collect()
        }
    };
    if idx.len() < 6 {
        return Err(BenchError::Domain(format!("window holds {} samples, at least 6 are needed", idx.len())));
    }
    let xs: Vec<f64> = idx.iter().map(|&i| (h / scan.t_samples[i]).ln()).collect();
    let ys: Vec<f64> = idx.iter().map(|&i| scan.sup_values[i].ln()).collect();
    let m = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / m, ys.iter().sum::<f64>() / m);
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx <= 0.0 {
        return Err(BenchError::Domain("window has a single distinct t".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let resid = (xs.iter().zip(&ys).map(|(x, y)| (y - my - slope * (x - mx)).powi(2)).sum::<f64>() / m).sqrt();

    let free_end = reflection.map_or(f64::INFINITY, |r| r.0);
    let regime = if idx.iter().all(|&i| scan.t_samples[i] <= free_end) {
        vec![Regime::Free]
    } else {
        classify(a, h)
    };
    let mut out = scan.clone();
    out.fitted_exponent = Some(slope);
    out.fit_residual = Some(resid);
    out.fit_samples = idx;
    out.window = Some(window);
    out.regime = regime;
    Ok(out)
}

/// Single-constant envelope fits over the fitted samples: the largest
/// constant needed above and the smallest below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeFit {
    pub upper: f64,
    pub lower: f64,
    /// upper / lower.
    pub ratio: f64,
    pub upper_ratios: Vec<f64>,
    pub lower_ratios: Vec<f64>,
}

/// Upper shape `h^{-d}(h/t)^{(d-2)/2}((h/t)^{1/2} + max(a,x)^{1/4}(h/t)^{1/4} + h^{1/3})`
/// with x the maximizer; lower shape `a^{1/4} h^{-d} (h/t)^{(d-2)/2+1/4}`.
pub fn envelope_fit(fit: &DecayFit) -> Result<EnvelopeFit> {
    let p = &fit.params;
    let (h, a, d) = (p.h, p.a, p.d as f64);
    let idx: Vec<usize> = if fit.fit_samples.is_empty() { (0..fit.t_samples.len()).collect() } else { fit.fit_samples.clone() };
    if idx.is_empty() {
        return Err(BenchError::Domain("no samples".into()));
    }
    let mut upper_ratios = Vec::new();
    let mut lower_ratios = Vec::new();
    for &i in &idx {
        let r = h / fit.t_samples[i];
        let base = h.powf(-d) * r.powf((d - 2.0) / 2.0);
        let xa = a.max(fit.argmax[i][0]);
        let up = base * (r.sqrt() + xa.powf(0.25) * r.powf(0.25) + h.powf(1.0 / 3.0));
        let lo = a.powf(0.25) * base * r.powf(0.25);
        upper_ratios.push(fit.sup_values[i] / up);
        lower_ratios.push(fit.sup_values[i] / lo);
    }
    let upper = upper_ratios.iter().fold(0.0f64, |m, &v| m.max(v));
    let lower = lower_ratios.iter().fold(f64::INFINITY, |m, &v| m.min(v));
    Ok(EnvelopeFit { upper, lower, ratio: upper / lower, upper_ratios, lower_ratios })
}
