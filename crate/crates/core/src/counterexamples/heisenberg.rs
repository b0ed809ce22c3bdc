use std::f64::consts::PI;

use super::subspace::{largest_principal_angle, orthonormal_basis};
use crate::{CMat, Error, Result, C64};

const SPAN_TOL: f64 = 1e-10;
const INVARIANCE_TOL: f64 = 1e-8;

/// Finite Heisenberg group over ℤ_M acting on ℂ^M ⊕ ℂ^M through π_ℏ ⊕ π_{−ℏ},
/// (π_ℏ(a, b, c)f)(j) = ω^{ℏ(c + bj)} f(j + a), ω = e^{2πi/M}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeisenbergModel {
    pub m: usize,
    pub hbar: i64,
}

impl HeisenbergModel {
    pub fn new(m: usize, hbar: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidInput("need M ≥ 2".into()));
        }
        if hbar.rem_euclid(m as i64) == 0 {
            return Err(Error::InvalidInput("ℏ must be nonzero mod M".into()));
        }
        Ok(Self { m, hbar })
    }

    pub fn dim(&self) -> usize {
        2 * self.m
    }

    /// (a, b, c)(a′, b′, c′) = (a + a′, b + b′, c + c′ + ab′), reduced mod M.
    pub fn mul(&self, g: (i64, i64, i64), h: (i64, i64, i64)) -> (i64, i64, i64) {
        let m = self.m as i64;
        ((g.0 + h.0).rem_euclid(m), (g.1 + h.1).rem_euclid(m), (g.2 + h.2 + g.0 * h.1).rem_euclid(m))
    }

    fn omega(&self, k: i64) -> C64 {
        let m = self.m as i64;
        C64::new(0.0, 2.0 * PI * k.rem_euclid(m) as f64 / m as f64).exp()
    }

    /// π_h(a, b, c) as an M × M matrix.
    pub fn irrep(&self, h: i64, g: (i64, i64, i64)) -> CMat {
        let m = self.m as i64;
        let mut p = CMat::zeros(self.m, self.m);
        for j in 0..m {
            p[(j as usize, (j + g.0).rem_euclid(m) as usize)] = self.omega(h * (g.2 + g.1 * j));
        }
        p
    }

    /// π₊(g) ⊕ π₋(g).
    pub fn action(&self, g: (i64, i64, i64)) -> CMat {
        let mut p = CMat::zeros(self.dim(), self.dim());
        p.view_mut((0, 0), (self.m, self.m)).copy_from(&self.irrep(self.hbar, g));
        p.view_mut((self.m, self.m), (self.m, self.m)).copy_from(&self.irrep(-self.hbar, g));
        p
    }

    pub fn generators(&self) -> [CMat; 3] {
        [self.action((1, 0, 0)), self.action((0, 1, 0)), self.action((0, 0, 1))]
    }
}

/// Smallest subspace containing the seed columns and invariant under the generators.
pub fn invariant_closure(model: &HeisenbergModel, seeds: &CMat) -> Result<CMat> {
    let gens = model.generators();
    let mut q = orthonormal_basis(seeds, SPAN_TOL)?;
    loop {
        let mut cols: Vec<CMat> = vec![q.clone()];
        cols.extend(gens.iter().map(|g| g * &q));
        let stacked = hstack(&cols, model.dim());
        let next = orthonormal_basis(&stacked, SPAN_TOL)?;
        if next.ncols() == q.ncols() {
            return Ok(next);
        }
        q = next;
    }
}

/// Span of π(g)v over all M³ group elements and all seed columns.
pub fn brute_force_span(model: &HeisenbergModel, seeds: &CMat) -> Result<CMat> {
    let m = model.m as i64;
    let mut cols = Vec::with_capacity((m * m * m) as usize);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                cols.push(model.action((a, b, c)) * seeds);
            }
        }
    }
    orthonormal_basis(&hstack(&cols, model.dim()), SPAN_TOL)
}

fn hstack(blocks: &[CMat], rows: usize) -> CMat {
    let n: usize = blocks.iter().map(|b| b.ncols()).sum();
    let mut out = CMat::zeros(rows, n);
    let mut at = 0;
    for b in blocks {
        out.view_mut((0, at), (rows, b.ncols())).copy_from(b);
        at += b.ncols();
    }
    out
}

/// |M⁻¹ Σ_a ω^{−2ℏβab}|, the weight left on the opposite summand by the averaging.
pub fn phase_average(m: usize, hbar: i64, beta: i64, b: i64) -> f64 {
    let mm = m as i64;
    let s: C64 = (0..mm)
        .map(|a| C64::new(0.0, -2.0 * PI * (2 * hbar * beta * a * b).rem_euclid(mm) as f64 / m as f64).exp())
        .sum();
    s.norm() / m as f64
}

#[derive(Debug, Clone)]
pub struct HeisenbergDecomposition {
    /// Orthonormal basis of D₊ = K₀ ∩ (ℂ^M ⊕ 0).
    pub plus_basis: CMat,
    /// Orthonormal basis of D₋ = K₀ ∩ (0 ⊕ ℂ^M).
    pub minus_basis: CMat,
    /// Largest principal angle between K₀ and D₊ ⊕ D₋.
    pub angle: f64,
    pub invariance_residual: f64,
    /// Leakage of the averaging onto the opposite summand.
    pub phase: f64,
}

/// Splits an invariant K₀ ⊂ ℂ^M ⊕ ℂ^M into its two summands.
///
/// For v ∈ K₀ the vector M⁻¹ Σ_a ω^{∓ℏβab} π(a,0,0)π(0,βb,0)π(−a,0,0)v equals
/// π₊(0,βb,0)v₊ ⊕ 0 (resp. 0 ⊕ π₋(0,βb,0)v₋) when 2ℏβb ≢ 0 mod M; applying
/// π(0,−βb,0) recovers the components, which therefore lie in K₀.
pub fn heisenberg_uncorrelated(
    model: &HeisenbergModel,
    k0: &CMat,
    beta: i64,
    b: i64,
) -> Result<HeisenbergDecomposition> {
    if k0.nrows() != model.dim() {
        return Err(Error::InvalidInput("K₀ must live in ℂ^M ⊕ ℂ^M".into()));
    }
    let m = model.m as i64;
    if (2 * model.hbar * beta * b).rem_euclid(m) == 0 {
        return Err(Error::InvalidInput("averaging needs 2ℏβb ≢ 0 mod M".into()));
    }
    let q = orthonormal_basis(k0, SPAN_TOL)?;
    let proj = &q * q.adjoint();
    let mut residual = 0.0f64;
    for g in model.generators() {
        let gq = &g * &q;
        residual = residual.max((&gq - &proj * &gq).norm());
    }
    if residual > INVARIANCE_TOL {
        return Err(Error::NotInvariant { residual });
    }
    let bb = beta * b;
    let undo = model.action((0, -bb, 0));
    let averaged = |sign: i64| -> CMat {
        let mut acc = CMat::zeros(model.dim(), model.dim());
        for a in 0..m {
            let conj = model.action((a, 0, 0)) * model.action((0, bb, 0)) * model.action((-a, 0, 0));
            acc += conj * model.omega(-sign * model.hbar * bb * a);
        }
        &undo * acc / C64::new(m as f64, 0.0) * &q
    };
    let dp = orthonormal_basis(&averaged(1), SPAN_TOL)?;
    let dm = orthonormal_basis(&averaged(-1), SPAN_TOL)?;
    let sum = orthonormal_basis(&hstack(&[dp.clone(), dm.clone()], model.dim()), SPAN_TOL)?;
    Ok(HeisenbergDecomposition {
        angle: largest_principal_angle(&q, &sum),
        plus_basis: dp,
        minus_basis: dm,
        invariance_residual: residual,
        phase: phase_average(model.m, model.hbar, beta, b),
    })
}
