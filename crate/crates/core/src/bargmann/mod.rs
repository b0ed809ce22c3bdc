//! The one-dimensional Segal–Bargmann transform through the restriction
//! map RF(x) = e^{−x²/2}F(x) from Fock space to L²(ℝ, dx/√(2π)).
//!
//! Grid functions live on a Gauss–Legendre grid over [−L, L]; Fock vectors
//! are coefficients in the orthonormal monomials zᵏ/√(k!).

mod fock;
mod heat;
mod hermite;
mod transform;

pub use fock::{fock_kernel, FockVector};
pub use heat::{heat_convolve, rr_star, sqrt_rr_star, HeatKernelOp, TRUNCATION_TOL};
pub use hermite::{hermite_functions, HermiteExpansion};
pub use transform::{
    bargmann_composed, bargmann_transform, half_heat_matrix, r_star, r_star_matrix, restriction,
};

use crate::numerics::{gauss_legendre, Barycentric, QuadratureRule};
use crate::{Error, Result, C64};

/// Default half-width of the grid.
pub const DEFAULT_HALF_WIDTH: f64 = 12.0;
/// Default number of grid nodes.
pub const DEFAULT_GRID_NODES: usize = 400;

/// 1/√(2π), the density of the reference measure.
pub(crate) const MEASURE: f64 = 0.398_942_280_401_432_7;

/// Complex samples on a Gauss–Legendre grid over [−L, L].
#[derive(Debug, Clone)]
pub struct LineGrid {
    rule: QuadratureRule<f64>,
    values: Vec<C64>,
}

impl LineGrid {
    pub fn new(rule: QuadratureRule<f64>, values: Vec<C64>) -> Result<Self> {
        if values.len() != rule.len() {
            return Err(Error::InvalidInput("one value per node".into()));
        }
        Ok(Self { rule, values })
    }

    pub fn from_fn<F: Fn(f64) -> C64>(rule: QuadratureRule<f64>, f: F) -> Result<Self> {
        let values = rule.nodes().iter().map(|&x| f(x)).collect();
        Self::new(rule, values)
    }

    /// [−12, 12] with 400 nodes.
    pub fn default_rule() -> Result<QuadratureRule<f64>> {
        gauss_legendre(DEFAULT_GRID_NODES, -DEFAULT_HALF_WIDTH, DEFAULT_HALF_WIDTH)
    }

    pub fn rule(&self) -> &QuadratureRule<f64> {
        &self.rule
    }

    pub fn nodes(&self) -> &[f64] {
        self.rule.nodes()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// ∫ f̄ g dx/√(2π).
    pub fn inner(&self, other: &Self) -> Result<C64> {
        if self.rule.len() != other.rule.len() || self.rule.interval() != other.rule.interval() {
            return Err(Error::InvalidInput("grids differ".into()));
        }
        let mut acc = C64::new(0.0, 0.0);
        for ((a, b), w) in self.values.iter().zip(&other.values).zip(self.rule.weights()) {
            acc += a.conj() * b * *w;
        }
        Ok(acc * MEASURE)
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).map(|v| v.re.max(0.0).sqrt()).unwrap_or(f64::NAN)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.norm()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.values.len() != other.values.len() {
            return Err(Error::InvalidInput("grids differ".into()));
        }
        Self::new(self.rule.clone(), self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect())
    }

    pub(crate) fn interpolator(&self) -> Barycentric<f64> {
        Barycentric::from_rule(&self.rule)
    }
}
