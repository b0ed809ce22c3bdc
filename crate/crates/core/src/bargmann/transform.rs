use nalgebra::DMatrix;

use super::fock::FockVector;
use super::heat::{check_truncation, heat_convolve};
use super::hermite::HermiteExpansion;
use super::{LineGrid, MEASURE};
use crate::numerics::{eigendecompose_hermitian, HermitianMatrix, QuadratureRule};
use crate::{CMat, Error, Result, C64};

/// RF(x) = e^{−x²/2} F(x) on the nodes of `rule`.
pub fn restriction(f: &FockVector, rule: &QuadratureRule<f64>) -> Result<LineGrid> {
    LineGrid::from_fn(rule.clone(), |x| {
        let mut p = (-x * x / 2.0).exp();
        let mut acc = C64::new(0.0, 0.0);
        for (k, a) in f.coefficients().iter().enumerate() {
            if k > 0 {
                p *= x / (k as f64).sqrt();
            }
            acc += a * p;
        }
        acc
    })
}

/// R*h(z) = ∫ h(x) e^{−x²/2 + xz} dx/√(2π) = e^{z²/2}(H₁ ∗ h)(z), as Fock coefficients
/// a_k = ∫ h(x) e^{−x²/2} xᵏ/√(k!) dx/√(2π), k ≤ degree.
pub fn r_star(h: &LineGrid, degree: usize) -> Result<FockVector> {
    check_truncation(h)?;
    let mut a = vec![C64::new(0.0, 0.0); degree + 1];
    for ((&x, &w), v) in h.nodes().iter().zip(h.rule().weights()).zip(h.values()) {
        let mut p = (-x * x / 2.0).exp() * w * MEASURE;
        for (k, ak) in a.iter_mut().enumerate() {
            if k > 0 {
                p *= x / (k as f64).sqrt();
            }
            *ak += v * p;
        }
    }
    Ok(FockVector::new(a))
}

/// Bh(z) = √2 e^{−z²/2} ∫ h(x) e^{−x² + 2xz} dx/√(2π) as Fock coefficients up to `degree`.
pub fn bargmann_transform(h: &LineGrid, degree: usize) -> Result<FockVector> {
    check_truncation(h)?;
    // Taylor coefficients of ∫ h e^{−x²} e^{2xz}.
    let mut c = vec![C64::new(0.0, 0.0); degree + 1];
    for ((&x, &w), v) in h.nodes().iter().zip(h.rule().weights()).zip(h.values()) {
        let mut p = (-x * x).exp() * w * MEASURE;
        for (k, ck) in c.iter_mut().enumerate() {
            if k > 0 {
                p *= 2.0 * x / k as f64;
            }
            *ck += v * p;
        }
    }
    // Multiply by e^{−z²/2} = Σ (−½)^j z^{2j}/j!.
    let mut g = vec![0.0; degree + 1];
    let mut q = 1.0;
    for j in 0..=degree / 2 {
        if j > 0 {
            q *= -0.5 / j as f64;
        }
        g[2 * j] = q;
    }
    let mut out = vec![C64::new(0.0, 0.0); degree + 1];
    let mut sqrt_fact = 1.0;
    for (n, o) in out.iter_mut().enumerate() {
        if n > 0 {
            sqrt_fact *= (n as f64).sqrt();
        }
        let mut acc = C64::new(0.0, 0.0);
        for k in 0..=n {
            acc += c[k] * g[n - k];
        }
        *o = acc * (std::f64::consts::SQRT_2 * sqrt_fact);
    }
    Ok(FockVector::new(out))
}

fn basis_grids(rule: &QuadratureRule<f64>, degree: usize) -> Result<Vec<LineGrid>> {
    (0..=degree).map(|n| HermiteExpansion::basis(n).to_grid(rule)).collect()
}

/// ⟨φ_k, H_{1/2} φ_n⟩ for k, n ≤ degree.
pub fn half_heat_matrix(rule: &QuadratureRule<f64>, degree: usize) -> Result<CMat> {
    let phis = basis_grids(rule, degree)?;
    let mut a = CMat::zeros(degree + 1, degree + 1);
    for (n, phi) in phis.iter().enumerate() {
        let hp = heat_convolve(0.5, phi)?;
        let proj = HermiteExpansion::from_grid(&hp, degree);
        for (k, c) in proj.coefficients().iter().enumerate() {
            a[(k, n)] = *c;
        }
    }
    Ok(a)
}

/// Fock coefficient k of R*φ_n for k, n ≤ degree.
pub fn r_star_matrix(rule: &QuadratureRule<f64>, degree: usize) -> Result<CMat> {
    let phis = basis_grids(rule, degree)?;
    let mut m = CMat::zeros(degree + 1, degree + 1);
    for (n, phi) in phis.iter().enumerate() {
        for (k, c) in r_star(phi, degree)?.coefficients().iter().enumerate() {
            m[(k, n)] = *c;
        }
    }
    Ok(m)
}

/// Smallest admissible eigenvalue of the truncated √(RR*).
pub const CONDITION_FLOOR: f64 = 1e-10;

/// B = R* ∘ (√RR*)⁻¹ on span{φ_0, …, φ_degree}, with √RR* inverted as a
/// truncated matrix in the Hermite basis.
pub fn bargmann_composed(h: &LineGrid, degree: usize) -> Result<FockVector> {
    let rule = h.rule();
    let a = half_heat_matrix(rule, degree)?;
    let sym = HermitianMatrix::with_tolerance(a.clone(), 1e-8)?;
    let eig = eigendecompose_hermitian(&sym)?;
    if eig.min() < CONDITION_FLOOR {
        return Err(Error::IllConditioned { min_eigenvalue: eig.min() });
    }
    let rs = r_star_matrix(rule, degree)?;
    let coeffs = HermiteExpansion::from_grid(h, degree);
    let b = DMatrix::from_column_slice(degree + 1, 1, coeffs.coefficients());
    let x = sym
        .matrix()
        .clone()
        .lu()
        .solve(&b)
        .ok_or(Error::IllConditioned { min_eigenvalue: eig.min() })?;
    let y = rs * x;
    Ok(FockVector::new(y.iter().copied().collect()))
}

