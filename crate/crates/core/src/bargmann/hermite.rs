use super::{LineGrid, MEASURE};
use crate::numerics::QuadratureRule;
use crate::{Result, C64};

/// φ_0(x), …, φ_n(x) with φ_k = √2 (2ᵏ k!)^{−1/2} e^{−x²} H_k(√2 x),
/// orthonormal in L²(ℝ, dx/√(2π)).
pub fn hermite_functions(n_max: usize, x: f64) -> Vec<f64> {
    let u = std::f64::consts::SQRT_2 * x;
    // √2 π^{1/4} times the L²(du)-normalized Hermite functions of u.
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = 0.0;
    let mut cur = std::f64::consts::SQRT_2 * (-x * x).exp();
    out.push(cur);
    for k in 0..n_max {
        let next = (2.0 / (k as f64 + 1.0)).sqrt() * u * cur - (k as f64 / (k as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Σ c_n φ_n.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteExpansion {
    coefficients: Vec<C64>,
}

impl HermiteExpansion {
    pub fn new(coefficients: Vec<C64>) -> Self {
        Self { coefficients }
    }

    pub fn basis(n: usize) -> Self {
        let mut c = vec![C64::new(0.0, 0.0); n + 1];
        c[n] = C64::new(1.0, 0.0);
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn norm(&self) -> f64 {
        self.coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn to_grid(&self, rule: &QuadratureRule<f64>) -> Result<LineGrid> {
        let n = self.degree();
        LineGrid::from_fn(rule.clone(), |x| {
            hermite_functions(n, x)
                .iter()
                .zip(&self.coefficients)
                .fold(C64::new(0.0, 0.0), |acc, (p, c)| acc + c * *p)
        })
    }

    /// Coefficients ⟨φ_n, f⟩ for n = 0..=n_max by quadrature.
    pub fn from_grid(f: &LineGrid, n_max: usize) -> Self {
        let mut c = vec![C64::new(0.0, 0.0); n_max + 1];
        for ((&x, &w), v) in f.nodes().iter().zip(f.rule().weights()).zip(f.values()) {
            for (ck, p) in c.iter_mut().zip(hermite_functions(n_max, x)) {
                *ck += v * (p * w * MEASURE);
            }
        }
        Self::new(c)
    }
}
