use serde::{Deserialize, Serialize};

/// The C∞ bump `exp(-1/(1-s²))` on `(-1, 1)`, rescaled to `[center - half, center + half]`.
///
/// The value at the center is `e^{-1}` unless `normalized` peak scaling is
/// requested through [`Bump::unit_peak`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bump {
    pub center: f64,
    pub half_width: f64,
    pub peak: f64,
}

impl Bump {
    pub fn new(center: f64, half_width: f64) -> Self {
        assert!(half_width > 0.0, "bump half-width must be positive");
        Bump { center, half_width, peak: 1.0 }
    }

    /// Scaled so that the value at the center is exactly 1.
    pub fn unit_peak(center: f64, half_width: f64) -> Self {
        Bump { center, half_width, peak: std::f64::consts::E }
    }

    pub fn support(&self) -> (f64, f64) {
        (self.center - self.half_width, self.center + self.half_width)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let s = (x - self.center) / self.half_width;
        let d = 1.0 - s * s;
        if d <= 0.0 {
            0.0
        } else {
            self.peak * (-1.0 / d).exp()
        }
    }
}

/// A smooth even taper: 1 on `|s| ≤ flat`, 0 on `|s| ≥ 1`, C∞ in between.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlateauTaper {
    pub flat: f64,
}

impl PlateauTaper {
    pub fn new(flat: f64) -> Self {
        assert!((0.0..1.0).contains(&flat), "plateau must lie in [0, 1)");
        PlateauTaper { flat }
    }

    pub fn eval(&self, s: f64) -> f64 {
        let s = s.abs();
        if s <= self.flat {
            return 1.0;
        }
        if s >= 1.0 {
            return 0.0;
        }
        let u = (s - self.flat) / (1.0 - self.flat);
        let f = |v: f64| if v <= 0.0 { 0.0 } else { (-1.0 / v).exp() };
        let a = f(1.0 - u);
        a / (a + f(u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_support_and_symmetry() {
        let b = Bump::new(2.0, 0.5);
        assert_eq!(b.eval(1.5), 0.0);
        assert_eq!(b.eval(2.6), 0.0);
        assert!((b.eval(1.8) - b.eval(2.2)).abs() < 1e-15);
        assert!((Bump::unit_peak(0.0, 1.0).eval(0.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn taper_is_monotone_between_plateau_and_edge() {
        let t = PlateauTaper::new(0.5);
        assert_eq!(t.eval(0.3), 1.0);
        assert_eq!(t.eval(-1.2), 0.0);
        let mut prev = 1.0;
        for i in 0..=100 {
            let v = t.eval(0.5 + 0.5 * i as f64 / 100.0);
            assert!(v <= prev + 1e-15);
            prev = v;
        }
    }
}
