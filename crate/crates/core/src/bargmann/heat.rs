use super::{LineGrid, MEASURE};
use crate::numerics::gauss_legendre;
use crate::{Error, Result, C64};

/// Largest admissible |f| at the grid ends, relative to sup |f|.
pub const TRUNCATION_TOL: f64 = 1e-12;

const WINDOW_SIGMAS: f64 = 8.0;
const LOCAL_NODES: usize = 128;

/// Convolution with the heat kernel t^{−1/2} e^{−(y−x)²/2t} against dx/√(2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatKernelOp {
    t: f64,
}

impl HeatKernelOp {
    pub fn new(t: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidInput(format!("heat time must be positive, got {t}")));
        }
        Ok(Self { t })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn kernel(&self, y: f64, x: f64) -> f64 {
        MEASURE * (-(y - x) * (y - x) / (2.0 * self.t)).exp() / self.t.sqrt()
    }

    pub fn apply(&self, f: &LineGrid) -> Result<LineGrid> {
        heat_convolve(self.t, f)
    }
}

pub(crate) fn check_truncation(f: &LineGrid) -> Result<()> {
    let sup = f.sup_norm();
    if sup == 0.0 {
        return Ok(());
    }
    let v = f.values();
    let boundary = v[0].norm().max(v[v.len() - 1].norm()) / sup;
    if boundary > TRUNCATION_TOL {
        return Err(Error::TruncationWarning { boundary });
    }
    Ok(())
}

/// H_t ∗ f at the nodes of f's grid.
///
/// Each output value integrates over [y − 8√t, y + 8√t] ∩ [−L, L] with a
/// local Gauss–Legendre rule; f is evaluated there by barycentric
/// interpolation.
pub fn heat_convolve(t: f64, f: &LineGrid) -> Result<LineGrid> {
    let op = HeatKernelOp::new(t)?;
    check_truncation(f)?;
    let (lo, hi) = f.rule().interval();
    let interp = f.interpolator();
    let half = WINDOW_SIGMAS * t.sqrt();
    let reference = gauss_legendre(LOCAL_NODES, -1.0, 1.0)?;
    let mut out = Vec::with_capacity(f.values().len());
    for &y in f.nodes() {
        let a = (y - half).max(lo);
        let b = (y + half).min(hi);
        let (mid, rad) = ((a + b) / 2.0, (b - a) / 2.0);
        let mut acc = C64::new(0.0, 0.0);
        for (&u, &w) in reference.nodes().iter().zip(reference.weights()) {
            let x = mid + rad * u;
            acc += interp.eval(f.values(), x) * (rad * w * op.kernel(y, x));
        }
        out.push(acc);
    }
    LineGrid::new(f.rule().clone(), out)
}

/// RR* = H₁ ∗ ·.
pub fn rr_star(h: &LineGrid) -> Result<LineGrid> {
    heat_convolve(1.0, h)
}

/// √(RR*) = H_{1/2} ∗ ·.
pub fn sqrt_rr_star(h: &LineGrid) -> Result<LineGrid> {
    heat_convolve(0.5, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_widens() {
        let rule = LineGrid::default_rule().unwrap();
        let f = LineGrid::from_fn(rule, |x| C64::new((-x * x / 2.0).exp(), 0.0)).unwrap();
        let t = 0.6;
        let g = heat_convolve(t, &f).unwrap();
        for (&y, v) in g.nodes().iter().zip(g.values()) {
            let e = (-y * y / (2.0 * (1.0 + t))).exp() / (1.0 + t).sqrt();
            assert!((v.re - e).abs() < 1e-13);
        }
    }

    #[test]
    fn truncation_flagged() {
        let rule = crate::numerics::gauss_legendre(50, -2.0, 2.0).unwrap();
        let f = LineGrid::from_fn(rule, |_| C64::new(1.0, 0.0)).unwrap();
        assert!(matches!(heat_convolve(1.0, &f), Err(Error::TruncationWarning { .. })));
        assert!(HeatKernelOp::new(0.0).is_err());
    }
}
