use std::f64::consts::PI;

use super::form::delta_norm_sq;
use super::grid::{pi_s_action, GridFunction, SL2};
use super::holomorphic::HolomorphicVector;
use crate::numerics::{gauss_legendre, ln_factorial};
use crate::os_core::{doubled_with, OsSystem, Semigroup};
use crate::{CMatrix, Error, Result, C64};

/// Finite combination Σ c_n δ^{(n)} of derivatives of δ at 0.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionVector {
    s: f64,
    coefficients: Vec<C64>,
}

impl DistributionVector {
    pub fn new(s: f64, coefficients: Vec<C64>) -> Result<Self> {
        super::check_s(s)?;
        Ok(Self { s, coefficients })
    }

    /// δ^{(n)}.
    pub fn basis(s: f64, n: usize) -> Result<Self> {
        let mut c = vec![C64::new(0.0, 0.0); n + 1];
        c[n] = C64::new(1.0, 0.0);
        Self::new(s, c)
    }

    /// The functional of f on polynomials of degree ≤ n_max: Σ (−1)ⁿ m_n(f)/n! δ^{(n)}.
    pub fn from_function(s: f64, f: &GridFunction, n_max: usize) -> Result<Self> {
        let m = f.moments(n_max);
        let c = m
            .iter()
            .enumerate()
            .map(|(n, mn)| {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                mn * (sign / ln_factorial::<f64>(n).exp())
            })
            .collect();
        Self::new(s, c)
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    /// ⟨self, other⟩_J = Σ c̄_n d_n ‖δ^{(n)}‖².
    pub fn j_form(&self, other: &Self) -> Result<C64> {
        if self.s != other.s {
            return Err(Error::InvalidInput("different s".into()));
        }
        let mut acc = C64::new(0.0, 0.0);
        for (n, (a, b)) in self.coefficients.iter().zip(&other.coefficients).enumerate() {
            acc += a.conj() * b * delta_norm_sq(self.s, n)?;
        }
        Ok(acc)
    }

    /// U(δ^{(n)}) = π^{−1}(s−1)(s−2)⋯(s−n) zⁿ.
    pub fn to_holomorphic(&self) -> Result<HolomorphicVector> {
        let mut p = 1.0 / PI;
        let mut taylor = Vec::with_capacity(self.coefficients.len());
        for (n, c) in self.coefficients.iter().enumerate() {
            if n > 0 {
                p *= self.s - n as f64;
            }
            taylor.push(c * p);
        }
        HolomorphicVector::new(self.s, taylor)
    }
}

/// 2n + 1 − s for n = 0..=n_max.
pub fn dilation_spectrum(s: f64, n_max: usize) -> Result<Vec<f64>> {
    super::check_s(s)?;
    Ok((0..=n_max).map(|n| 2.0 * n as f64 + 1.0 - s).collect())
}

/// m_n(U_t f)/m_n(f) with U_t = π_s(diag(e^t, e^{−t})), n = 0..=n_max.
pub fn moment_ratio_samples(s: f64, probe: &GridFunction, n_max: usize, t: f64) -> Result<Vec<f64>> {
    let moved = pi_s_action(s, &SL2::dilation(t), probe)?;
    let m0 = probe.moments(n_max);
    let m1 = moved.moments(n_max);
    m0.iter()
        .zip(&m1)
        .enumerate()
        .map(|(n, (a, b))| {
            if a.norm() < 1e-300 {
                return Err(Error::InvalidInput(format!("probe moment {n} vanishes")));
            }
            Ok((b / a).re)
        })
        .collect()
}

const PROBE_RADIUS: f64 = 0.8;
const PROBE_POWER: i32 = 8;

/// (ρ² − x²)^8 (1 + x) on [−ρ, ρ], ρ = 0.8; every moment is nonzero.
pub(crate) fn default_probe(n_max: usize) -> Result<GridFunction> {
    let nodes = (n_max + 2 * PROBE_POWER as usize + 2).max(64);
    let r = PROBE_RADIUS;
    let rule = gauss_legendre(nodes, -r, r)?;
    GridFunction::from_real_fn(rule, |x| (r * r - x * x).powi(PROBE_POWER) * (1.0 + x / r))
}

/// OS system on span{δ, …, δ^{(n_max)}} doubled by J.
///
/// Gram blocks [[2D, D], [D, 2D]] with D the δ-Gram, generator diag(−E, E)
/// with E the dilation spectrum, and samples at ±t built from measured
/// moment ratios of a probe function.
pub fn delta_system(s: f64, n_max: usize, times: &[f64]) -> Result<OsSystem<f64>> {
    super::check_s(s)?;
    let d: Vec<f64> = (0..=n_max).map(|n| delta_norm_sq(s, n)).collect::<Result<_>>()?;
    let e = dilation_spectrum(s, n_max)?;
    let k = n_max + 1;
    let mut gen = CMatrix::<f64>::zeros(2 * k, 2 * k);
    for i in 0..k {
        gen[(i, i)] = C64::new(-e[i], 0.0);
        gen[(i + k, i + k)] = C64::new(e[i], 0.0);
    }
    let probe = default_probe(n_max)?;
    let mut samples = Vec::new();
    for &t in times {
        if !(t > 0.0) {
            return Err(Error::InvalidInput("sample times must be positive".into()));
        }
        let lam = moment_ratio_samples(s, &probe, n_max, t)?;
        let mut fwd = CMatrix::<f64>::zeros(2 * k, 2 * k);
        let mut bwd = CMatrix::<f64>::zeros(2 * k, 2 * k);
        for i in 0..k {
            fwd[(i, i)] = C64::new(lam[i], 0.0);
            fwd[(i + k, i + k)] = C64::new(1.0 / lam[i], 0.0);
            bwd[(i, i)] = C64::new(1.0 / lam[i], 0.0);
            bwd[(i + k, i + k)] = C64::new(lam[i], 0.0);
        }
        samples.push((t, fwd));
        samples.push((-t, bwd));
    }
    let semigroup = if samples.is_empty() {
        Semigroup::Generator(gen)
    } else {
        Semigroup::Both { generator: gen, samples }
    };
    doubled_with(&d, semigroup)
}
