//! Seeded random systems satisfying the Basic Lemma hypotheses.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numerics::HermitianMatrix;
use crate::os_core::OsSystem;
use crate::{CMatrix, Real, Result};

/// A system together with commuting operators satisfying Jγ = γ⁻¹J and γK₀ ⊆ K₀.
#[derive(Debug, Clone)]
pub struct BasicLemmaCase<T: Real> {
    pub system: OsSystem<T>,
    pub gammas: Vec<CMatrix<T>>,
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gauss<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn cgauss<T: Real, R: Rng>(rng: &mut R) -> Complex<T> {
    Complex::new(T::lit(gauss(rng)), T::lit(gauss(rng))) * T::lit(std::f64::consts::FRAC_1_SQRT_2).cplx()
}

/// I + ε·(complex Gaussian matrix).
pub fn perturbed_identity<T: Real, R: Rng>(rng: &mut R, n: usize, eps: f64) -> CMatrix<T> {
    let e = T::lit(eps).cplx();
    CMatrix::from_fn(n, n, |i, j| {
        let z = cgauss::<T, R>(rng) * e;
        if i == j {
            z + T::one().cplx()
        } else {
            z
        }
    })
}

/// Haar-like random unitary from the QR factor of a Gaussian matrix.
pub fn random_unitary<T: Real, R: Rng>(rng: &mut R, n: usize) -> CMatrix<T> {
    let g = CMatrix::<T>::from_fn(n, n, |_, _| cgauss::<T, R>(rng));
    g.qr().q()
}

fn block_diag<T: Real>(blocks: &[&CMatrix<T>]) -> CMatrix<T> {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut m = CMatrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        m.view_mut((off, off), b.shape()).copy_from(b);
        off += b.nrows();
    }
    m
}

fn swap_blocks<T: Real>(k: usize) -> CMatrix<T> {
    let mut m = CMatrix::zeros(2 * k, 2 * k);
    for i in 0..k {
        m[(i, i + k)] = T::one().cplx();
        m[(i + k, i)] = T::one().cplx();
    }
    m
}

fn diag_c<T: Real>(d: &[Complex<T>]) -> CMatrix<T> {
    CMatrix::from_fn(d.len(), d.len(), |i, j| if i == j { d[i] } else { T::zero().cplx() })
}

/// Expresses orthonormal-coordinate data in the basis given by the columns of `m`.
fn change_basis<T: Real>(
    m: &CMatrix<T>,
    j0: &CMatrix<T>,
    s0: &CMatrix<T>,
    ops: &[CMatrix<T>],
) -> Result<(HermitianMatrix<T>, CMatrix<T>, CMatrix<T>, Vec<CMatrix<T>>)> {
    let mi = m.clone().try_inverse().expect("basis change invertible");
    let g = HermitianMatrix::with_tolerance(m.adjoint() * m, T::lit(1e-10))?;
    let j = &mi * j0 * m;
    let s = &mi * s0;
    let ops = ops.iter().map(|o| &mi * o * m).collect();
    Ok((g, j, s, ops))
}

/// 8-dimensional system: H = H_a ⊕ H_b with J = I on H_a ≅ ℂ⁴ and the swap on
/// H_b ≅ ℂ² ⊕ ℂ², K₀ = H_a ⊕ (ℂ² ⊕ 0), so N is 2-dimensional. Each γ is
/// P·diag(±1)·P⁻¹ on H_a and diag(b, b⁻¹) on H_b, with shared P and shared
/// eigenbasis for b, so the `count` operators commute. The whole datum is
/// then written in a random non-orthonormal basis.
pub fn basic_lemma_case<T: Real, R: Rng>(rng: &mut R, count: usize) -> Result<BasicLemmaCase<T>> {
    let p = perturbed_identity::<T, R>(rng, 4, 0.5);
    let p_inv = p.clone().try_inverse().expect("P invertible");
    let r = perturbed_identity::<T, R>(rng, 2, 0.5);
    let r_inv = r.clone().try_inverse().expect("R invertible");
    let mut gammas0 = Vec::with_capacity(count);
    for _ in 0..count {
        let signs: Vec<Complex<T>> = (0..4)
            .map(|_| if rng.gen::<bool>() { T::one() } else { -T::one() }.cplx())
            .collect();
        let a = &p * diag_c(&signs) * &p_inv;
        let lam: Vec<Complex<T>> = (0..2)
            .map(|_| {
                let modulus = T::lit(rng.gen_range(-0.7f64..0.7).exp());
                let phase = T::lit(rng.gen_range(0.0..std::f64::consts::TAU));
                Complex::new(modulus * phase.cos(), modulus * phase.sin())
            })
            .collect();
        let b = &r * diag_c(&lam) * &r_inv;
        let b_inv = b.clone().try_inverse().expect("b invertible");
        gammas0.push(block_diag(&[&a, &b, &b_inv]));
    }
    let j0 = block_diag(&[&CMatrix::identity(4, 4), &swap_blocks(2)]);
    let mut s0 = CMatrix::<T>::zeros(8, 6);
    for i in 0..6 {
        s0[(i, i)] = T::one().cplx();
    }
    let mix = perturbed_identity::<T, R>(rng, 6, 0.3);
    let s0 = s0 * mix;
    let m = perturbed_identity::<T, R>(rng, 8, 0.3);
    let (g, j, s, gammas) = change_basis(&m, &j0, &s0, &gammas0)?;
    Ok(BasicLemmaCase { system: OsSystem::new(g, j, s, None)?, gammas })
}

/// 6-dimensional system with J = diag(I₃, −I₃), K₀ the graph of cV (V
/// unitary, 0 < c < 1) and unitary γ = diag(u, VuV*) with u a Hermitian
/// unitary, written in a random basis.
pub fn unitary_twisted_case<T: Real, R: Rng>(rng: &mut R) -> Result<BasicLemmaCase<T>> {
    let w = random_unitary::<T, R>(rng, 3);
    let v = random_unitary::<T, R>(rng, 3);
    let signs: Vec<Complex<T>> = (0..3)
        .map(|_| if rng.gen::<bool>() { T::one() } else { -T::one() }.cplx())
        .collect();
    let u1 = &w * diag_c(&signs) * w.adjoint();
    let u2 = &v * &u1 * v.adjoint();
    let gamma0 = block_diag(&[&u1, &u2]);
    let j0 = block_diag(&[&CMatrix::identity(3, 3), &(-CMatrix::<T>::identity(3, 3))]);
    let c = T::lit(rng.gen_range(0.1..0.9));
    let mut s0 = CMatrix::<T>::zeros(6, 3);
    s0.view_mut((0, 0), (3, 3)).copy_from(&CMatrix::identity(3, 3));
    s0.view_mut((3, 0), (3, 3)).copy_from(&(&v * c.cplx()));
    let m = perturbed_identity::<T, R>(rng, 6, 0.3);
    let (g, j, s, gammas) = change_basis(&m, &j0, &s0, &[gamma0])?;
    Ok(BasicLemmaCase { system: OsSystem::new(g, j, s, None)?, gammas })
}
