use std::f64::consts::PI;

/// An `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct Rule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Rule {
    /// Nodes by Newton iteration on the three-term recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Rule { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn nodes_on(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let c = 0.5 * (a + b);
        let r = 0.5 * (b - a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (c + r * x, r * w))
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        self.nodes_on(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// One panel `[a, b]` of a composite rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Panel {
    pub a: f64,
    pub b: f64,
}

/// Splits `[a, b]` into panels whose width never exceeds `width(x)` at the
/// panel's left end. `width` must be positive.
pub fn panels<W: Fn(f64) -> f64>(a: f64, b: f64, width: W) -> Vec<Panel> {
    let mut out = Vec::new();
    if b <= a {
        return out;
    }
    let mut x = a;
    while x < b {
        let w = width(x).max((b - a) * 1e-12);
        // Look ahead once so panels shrink before a fast region, not after.
        let w = w.min(width((x + w).min(b)).max((b - a) * 1e-12));
        let next = if x + w >= b - 1e-3 * w { b } else { x + w };
        out.push(Panel { a: x, b: next });
        x = next;
    }
    out
}

/// Adaptive bisection with an `n`-point rule; returns `(value, error_estimate)`.
pub fn adaptive<F: FnMut(f64) -> f64>(rule: &Rule, a: f64, b: f64, tol: f64, mut f: F) -> (f64, f64) {
    fn rec<F: FnMut(f64) -> f64>(
        rule: &Rule,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: u32,
        f: &mut F,
    ) -> (f64, f64) {
        let m = 0.5 * (a + b);
        let left = rule.integrate(a, m, &mut *f);
        let right = rule.integrate(m, b, &mut *f);
        let err = (left + right - whole).abs();
        if err <= tol || depth >= 40 {
            return (left + right, err);
        }
        let (l, el) = rec(rule, a, m, left, 0.5 * tol, depth + 1, f);
        let (r, er) = rec(rule, m, b, right, 0.5 * tol, depth + 1, f);
        (l + r, el + er)
    }
    let whole = rule.integrate(a, b, &mut f);
    rec(rule, a, b, whole, tol, 0, &mut f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 10, 20, 41] {
            let r = Rule::new(n);
            let s: f64 = r.weights().iter().sum();
            assert_abs_diff_eq!(s, 2.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn exact_for_polynomials_of_degree_2n_minus_1() {
        let r = Rule::new(6);
        for k in 0..12 {
            let v = r.integrate(0.0, 1.0, |x| x.powi(k));
            assert_abs_diff_eq!(v, 1.0 / (k as f64 + 1.0), epsilon = 1e-14);
        }
    }

    #[test]
    fn oscillatory_panels() {
        let r = Rule::new(12);
        let mut s = 0.0;
        for p in panels(0.0, 50.0, |_| 1.0) {
            s += r.integrate(p.a, p.b, |x| (10.0 * x).cos());
        }
        assert_abs_diff_eq!(s, (500.0f64).sin() / 10.0, epsilon = 1e-12);
    }

    #[test]
    fn adaptive_handles_peak() {
        let r = Rule::new(8);
        let (v, _) = adaptive(&r, -1.0, 1.0, 1e-13, |x| 1.0 / (1e-4 + x * x));
        let exact = 2.0 * (1.0 / 1e-2) * (1.0f64 / 1e-2).atan();
        assert!((v - exact).abs() / exact < 1e-11);
    }
}
