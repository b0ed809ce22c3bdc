use std::f64::consts::PI;

use super::grid::{GridFunction, SL2};
use crate::{Error, Result, C64};

/// Truncated Taylor series Σ F_n zⁿ of an element of H(s).
#[derive(Debug, Clone, PartialEq)]
pub struct HolomorphicVector {
    s: f64,
    taylor: Vec<C64>,
}

impl HolomorphicVector {
    pub fn new(s: f64, taylor: Vec<C64>) -> Result<Self> {
        super::check_s(s)?;
        if taylor.is_empty() {
            return Err(Error::InvalidInput("at least one coefficient".into()));
        }
        Ok(Self { s, taylor })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn degree(&self) -> usize {
        self.taylor.len() - 1
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.taylor
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.taylor.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn norm_sq(&self) -> f64 {
        rkhs_inner(self, self).map(|v| v.re).unwrap_or(f64::NAN)
    }
}

/// ⟨F, G⟩ = Σ F̄_n G_n / |binom(s−1, n)|, conjugate-linear in F.
pub fn rkhs_inner(f: &HolomorphicVector, g: &HolomorphicVector) -> Result<C64> {
    if f.s != g.s {
        return Err(Error::InvalidInput("vectors belong to different H(s)".into()));
    }
    let n = f.taylor.len().min(g.taylor.len());
    let b = super::binom_sm1(f.s, n.saturating_sub(1));
    Ok((0..n).fold(C64::new(0.0, 0.0), |acc, k| acc + f.taylor[k].conj() * g.taylor[k] / b[k].abs()))
}

/// Reproducing kernel u_w(z) = (1 − w̄z)^{s−1}, so that ⟨u_w, F⟩ = F(w).
pub fn kernel_vector(s: f64, w: C64, degree: usize) -> Result<HolomorphicVector> {
    super::check_s(s)?;
    if w.norm() >= 1.0 {
        return Err(Error::DomainEscape { modulus: w.norm() });
    }
    let b = super::binom_sm1(s, degree);
    let wc = w.conj();
    let mut p = C64::new(1.0, 0.0);
    let mut taylor = Vec::with_capacity(degree + 1);
    for bn in b {
        taylor.push(p * bn.abs());
        p *= wc;
    }
    HolomorphicVector::new(s, taylor)
}

/// Uf(z) = π^{−1} ∫ (1 − zu)^{s−1} f(u) du, i.e. C_n = π^{−1} binom(s−1,n)(−1)ⁿ m_n(f).
pub fn intertwiner_u(s: f64, f: &GridFunction, degree: usize) -> Result<HolomorphicVector> {
    super::check_s(s)?;
    let m = f.moments(degree);
    let b = super::binom_sm1(s, degree);
    let taylor = m
        .iter()
        .zip(&b)
        .enumerate()
        .map(|(n, (mn, bn))| {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            mn * (sign * bn / PI)
        })
        .collect();
    HolomorphicVector::new(s, taylor)
}

fn mul_trunc(a: &[C64], b: &[C64], n: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); n + 1];
    for (i, &ai) in a.iter().enumerate().take(n + 1) {
        if ai == C64::new(0.0, 0.0) {
            continue;
        }
        for (j, &bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

const BOUNDARY_SAMPLES: usize = 512;

/// ρ_s(g)F(z) = (a − cz)^{s−1} F((dz − b)/(a − cz)), truncated at the degree of F.
///
/// The power uses a^{s−1} (principal branch) times the binomial series of
/// (1 − (c/a)z)^{s−1}.
pub fn rho_s_action(s: f64, g: &SL2, f: &HolomorphicVector) -> Result<HolomorphicVector> {
    if s != f.s {
        return Err(Error::InvalidInput("s does not match the vector".into()));
    }
    let (a, b, c, d) = (g.a, g.b, g.c, g.d);
    for k in 0..BOUNDARY_SAMPLES {
        let th = 2.0 * PI * k as f64 / BOUNDARY_SAMPLES as f64;
        let z = C64::new(th.cos(), th.sin());
        let den = C64::new(a, 0.0) - z * c;
        if den.norm() < 1e-14 {
            return Err(Error::DomainEscape { modulus: f64::INFINITY });
        }
        let w = (z * d - b) / den;
        if w.norm() > 1.0 + 1e-12 {
            return Err(Error::DomainEscape { modulus: w.norm() });
        }
    }
    if a == 0.0 || (c / a).abs() >= 1.0 {
        return Err(Error::DomainEscape { modulus: (c / a).abs() });
    }
    let n = f.degree();
    let r = c / a;
    let mut geo = Vec::with_capacity(n + 1);
    let mut p = 1.0 / a;
    for _ in 0..=n {
        geo.push(C64::new(p, 0.0));
        p *= r;
    }
    let w = mul_trunc(&[C64::new(-b, 0.0), C64::new(d, 0.0)], &geo, n);
    let mut acc = vec![C64::new(0.0, 0.0); n + 1];
    for &fk in f.taylor.iter().rev() {
        acc = mul_trunc(&acc, &w, n);
        acc[0] += fk;
    }
    let bs = super::binom_sm1(s, n);
    let lead = C64::new(a, 0.0).powf(s - 1.0);
    let mut pre = Vec::with_capacity(n + 1);
    let mut p = 1.0;
    for bn in bs {
        pre.push(lead * (bn * p));
        p *= -r;
    }
    HolomorphicVector::new(s, mul_trunc(&pre, &acc, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducing_property() {
        let s = 0.5;
        let f = HolomorphicVector::new(s, vec![C64::new(1.0, 0.5), C64::new(-0.3, 0.0), C64::new(0.2, 0.1)]).unwrap();
        let w = C64::new(0.3, -0.2);
        let u = kernel_vector(s, w, 2).unwrap();
        assert!((rkhs_inner(&u, &f).unwrap() - f.eval(w)).norm() < 1e-14);
    }

    #[test]
    fn rho_of_constant() {
        let s = 0.3;
        let g = SL2::hyperbolic(0.4);
        let one = HolomorphicVector::new(s, {
            let mut v = vec![C64::new(0.0, 0.0); 80];
            v[0] = C64::new(1.0, 0.0);
            v
        })
        .unwrap();
        let r = rho_s_action(s, &g, &one).unwrap();
        let z = C64::new(0.2, 0.1);
        let expect = (C64::new(g.a, 0.0) - z * g.c).powf(s - 1.0);
        assert!((r.eval(z) - expect).norm() < 1e-12);
    }

    #[test]
    fn escaping_element_rejected() {
        let s = 0.5;
        let f = HolomorphicVector::new(s, vec![C64::new(1.0, 0.0); 4]).unwrap();
        let g = SL2::new(0.5, 0.0, 0.0, 2.0).unwrap();
        assert!(matches!(rho_s_action(s, &g, &f), Err(Error::DomainEscape { .. })));
    }
}
