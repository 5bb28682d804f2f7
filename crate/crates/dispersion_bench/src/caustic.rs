use model_domain::WaveParams;
use wavefront_caustics::degenerate_point;

use crate::error::{BenchError, Result};
use crate::scan::{sup_scan, DecayFit, Method, ScanOptions, YRange};
use crate::ScanBox;

/// Samples per reflection in the coarse time search.
const T_SAMPLES: usize = 10;

/// Sup near each degenerate time t_N, N ∈ `ns`.
///
/// The field peaks slightly after the degenerate point, so for each N the
/// scan samples t ∈ [t_N − 2h^{1/3}, t_N + 4h^{1/3}], fits a parabola
/// through the largest sample and its neighbours, and rescans at the
/// vertex. The y range follows the caustic, `y_N t / t_N ± half`, and x
/// spans `x_range`. Returned samples are tagged with their N.
pub fn caustic_scan(
    params: &WaveParams,
    ns: &[i64],
    x_range: (f64, f64),
    half: f64,
    method: Method,
    opts: &ScanOptions,
) -> Result<DecayFit> {
    if ns.is_empty() {
        return Err(BenchError::Domain("no reflection index requested".into()));
    }
    let w = params.h.powf(1.0 / 3.0);
    let mut ts = Vec::new();
    let mut ys = Vec::new();
    let mut events = Vec::new();
    for &n in ns {
        let ev = degenerate_point(params, n, &[1.0])?;
        for k in 0..T_SAMPLES {
            let t = ev.t_n - 2.0 * w + 6.0 * w * k as f64 / (T_SAMPLES - 1) as f64;
            ts.push(t);
            ys.push(ev.y_n[0] * t / ev.t_n);
        }
        events.push(ev);
    }
    let bx = ScanBox { x: x_range, y: YRange::Centered { centers: ys, half }, mask: crate::MASK_C0 };
    let coarse = sup_scan(params, &ts, &bx, method, opts)?;

    let mut peak_t = Vec::new();
    let mut peak_y = Vec::new();
    for (i, ev) in events.iter().enumerate() {
        let sl = &coarse.sup_values[i * T_SAMPLES..(i + 1) * T_SAMPLES];
        let tl = &ts[i * T_SAMPLES..(i + 1) * T_SAMPLES];
        let k = (0..T_SAMPLES).max_by(|&a, &b| sl[a].total_cmp(&sl[b])).unwrap();
        let t = if k == 0 || k + 1 == T_SAMPLES {
            tl[k]
        } else {
            let (f0, f1, f2) = (sl[k - 1], sl[k], sl[k + 1]);
            let step = tl[k + 1] - tl[k];
            let den = f0 - 2.0 * f1 + f2;
            if den < 0.0 { tl[k] + 0.5 * step * (f0 - f2) / den } else { tl[k] }
        };
        peak_t.push(t);
        peak_y.push(ev.y_n[0] * t / ev.t_n);
    }
    let bx = ScanBox { x: x_range, y: YRange::Centered { centers: peak_y, half }, mask: crate::MASK_C0 };
    let mut fine = sup_scan(params, &peak_t, &bx, method, opts)?;
    // Keep the coarse maximum if the vertex landed lower.
    for i in 0..events.len() {
        let sl = &coarse.sup_values[i * T_SAMPLES..(i + 1) * T_SAMPLES];
        let k = (0..T_SAMPLES).max_by(|&a, &b| sl[a].total_cmp(&sl[b])).unwrap();
        if sl[k] > fine.sup_values[i] {
            let j = i * T_SAMPLES + k;
            fine.t_samples[i] = ts[j];
            fine.sup_values[i] = sl[k];
            fine.argmax[i] = coarse.argmax[j];
            fine.refinements[i] = coarse.refinements[j];
        }
        fine.caustic[i] = Some(ns[i]);
    }
    fine.warnings.extend(coarse.warnings);
    Ok(fine)
}
