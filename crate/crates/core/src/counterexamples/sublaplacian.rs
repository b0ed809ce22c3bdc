use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::numerics::{gauss_legendre, QuadratureRule};
use crate::{Error, Result, C64};

const K0_PANELS: usize = 6;
const K0_NODES: usize = 48;
/// The ξ-integral runs over |ξ| ≤ sinh(XI_SPAN).
const XI_SPAN: f64 = 7.0;
const XI_PANELS: usize = 16;
const XI_NODES: usize = 48;

fn reference_rule(n: usize) -> &'static QuadratureRule<f64> {
    static R48: OnceLock<QuadratureRule<f64>> = OnceLock::new();
    assert_eq!(n, 48);
    R48.get_or_init(|| gauss_legendre(48, -1.0, 1.0).expect("valid rule"))
}

fn panel_integral<F: FnMut(f64) -> f64>(lo: f64, hi: f64, panels: usize, n: usize, mut f: F) -> f64 {
    let r = reference_rule(n);
    let h = (hi - lo) / panels as f64;
    let mut s = 0.0;
    for p in 0..panels {
        let a = lo + p as f64 * h;
        for (&x, &w) in r.nodes().iter().zip(r.weights()) {
            s += 0.5 * h * w * f(a + 0.5 * h * (x + 1.0));
        }
    }
    s
}

/// K₀(r) = ∫₀^∞ e^{−r cosh t} dt, truncated where r cosh t = 50.
pub fn bessel_k0(r: f64) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidInput("K₀ needs a positive finite argument".into()));
    }
    let top = (50.0 / r).max(1.0 + 1e-12).acosh().max(1e-3);
    Ok(panel_integral(0.0, top, K0_PANELS, K0_NODES, |t| (-r * t.cosh()).exp()))
}

/// Fundamental solution of the sub-Laplacian on the centre-free quotient,
/// F(z, c) = 2πK₀(|z|); it does not depend on c.
pub fn sublaplacian_kernel(x: f64, y: f64, _c: f64) -> Result<f64> {
    Ok(2.0 * PI * bessel_k0(x.hypot(y))?)
}

/// Tensor-grid probe on {y > 0}; `values` are indexed [ix][iy][ic] in row-major order.
#[derive(Debug, Clone)]
pub struct HalfSpaceProbe {
    pub x_rule: QuadratureRule<f64>,
    pub y_rule: QuadratureRule<f64>,
    pub c_rule: QuadratureRule<f64>,
    pub values: Vec<C64>,
}

impl HalfSpaceProbe {
    pub fn new(
        x_rule: QuadratureRule<f64>,
        y_rule: QuadratureRule<f64>,
        c_rule: QuadratureRule<f64>,
        values: Vec<C64>,
    ) -> Result<Self> {
        if values.len() != x_rule.len() * y_rule.len() * c_rule.len() {
            return Err(Error::InvalidInput("probe values must fill the tensor grid".into()));
        }
        let p = Self { x_rule, y_rule, c_rule, values };
        let (ny, nc) = (p.y_rule.len(), p.c_rule.len());
        for ix in 0..p.x_rule.len() {
            for (iy, &y) in p.y_rule.nodes().iter().enumerate() {
                for ic in 0..nc {
                    let v = p.values[(ix * ny + iy) * nc + ic];
                    if y <= 0.0 && v.norm() > 0.0 {
                        return Err(Error::SupportViolation { value: v.norm() });
                    }
                }
            }
        }
        Ok(p)
    }

    /// f(x, y, c) = e^{ikx} exp(−|x−x₀|²/2σ² − |y−y₀|²/2σ² − c²/2), on a box of ±8σ
    /// clipped to y ≥ 0.
    pub fn gaussian(x0: f64, y0: f64, sigma: f64, k: f64, n: usize) -> Result<Self> {
        if !(sigma > 0.0) || !(y0 > 0.0) {
            return Err(Error::InvalidInput("need σ > 0 and y₀ > 0".into()));
        }
        let xr = gauss_legendre(n, x0 - 8.0 * sigma, x0 + 8.0 * sigma)?;
        let yr = gauss_legendre(n, (y0 - 8.0 * sigma).max(0.0), y0 + 8.0 * sigma)?;
        let cr = gauss_legendre(16, -8.0, 8.0)?;
        let mut values = Vec::with_capacity(n * n * 16);
        for &x in xr.nodes() {
            for &y in yr.nodes() {
                for &c in cr.nodes() {
                    let g = (-((x - x0).powi(2) + (y - y0).powi(2)) / (2.0 * sigma * sigma) - 0.5 * c * c).exp();
                    values.push(C64::new(0.0, k * x).exp() * g);
                }
            }
        }
        Self::new(xr, yr, cr, values)
    }

    /// ∫ f(x, y, c) dc on the (x, y) grid.
    pub fn c_marginal(&self) -> Vec<C64> {
        let nc = self.c_rule.len();
        self.values
            .chunks(nc)
            .map(|row| row.iter().zip(self.c_rule.weights()).map(|(v, &w)| v * w).sum())
            .collect()
    }

    fn weighted_points(&self) -> Vec<(f64, f64, C64)> {
        let fc = self.c_marginal();
        let ny = self.y_rule.len();
        let mut out = Vec::with_capacity(fc.len());
        for (ix, (&x, &wx)) in self.x_rule.nodes().iter().zip(self.x_rule.weights()).enumerate() {
            for (iy, (&y, &wy)) in self.y_rule.nodes().iter().zip(self.y_rule.weights()).enumerate() {
                out.push((x, y, fc[ix * ny + iy] * (wx * wy)));
            }
        }
        out
    }
}

/// ∫∫ f̄(u) f(v) F(τ(u)v⁻¹) du dv with F(τ(u)v⁻¹) = 2πK₀(√((x−x′)² + (y+y′)²)).
pub fn sublaplacian_direct_form(probe: &HalfSpaceProbe) -> Result<f64> {
    let pts = probe.weighted_points();
    let mut s = C64::new(0.0, 0.0);
    for (i, &(x, y, f)) in pts.iter().enumerate() {
        s += f.norm_sqr() * sublaplacian_kernel(0.0, 2.0 * y, 0.0)?;
        for &(x2, y2, g) in &pts[..i] {
            let k = sublaplacian_kernel(x - x2, y + y2, 0.0)?;
            s += 2.0 * (f.conj() * g).re * k;
        }
    }
    Ok(s.re)
}

/// π∫ |L(ξ)|² dξ/√(1+ξ²) with L(ξ) = Σ w f_c e^{−ixξ} e^{−y√(1+ξ²)};
/// evaluated in ξ = sinh u, where the weight becomes du.
pub fn sublaplacian_rp_form(probe: &HalfSpaceProbe) -> Result<f64> {
    let pts = probe.weighted_points();
    let q = panel_integral(-XI_SPAN, XI_SPAN, XI_PANELS, XI_NODES, |u| {
        let (xi, a) = (u.sinh(), u.cosh());
        let l: C64 = pts.iter().map(|&(x, y, f)| f * C64::new(-a * y, -x * xi).exp()).sum();
        l.norm_sqr()
    });
    Ok(PI * q)
}
