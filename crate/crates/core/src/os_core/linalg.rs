use nalgebra::linalg::Schur;

use crate::numerics::{eigendecompose_hermitian, frobenius, max, HermitianMatrix};
use crate::{CMatrix, Error, Real, Result};


/// Largest singular value.
pub(crate) fn op_norm<T: Real>(m: &CMatrix<T>) -> Result<T> {
    if m.is_empty() {
        return Ok(T::zero());
    }
    let g = HermitianMatrix::with_tolerance(m.adjoint() * m, T::lit(1e-8))?;
    let e = eigendecompose_hermitian(&g)?;
    Ok(crate::numerics::max(e.max(), T::zero()).sqrt())
}

/// Spectral radius from a bounded Schur iteration, falling back to
/// ρ(A) = lim ‖A^{2^k}‖^{1/2^k} with rescaling when QR stalls.
pub(crate) fn spectral_radius<T: Real>(m: &CMatrix<T>) -> T {
    if m.is_empty() {
        return T::zero();
    }
    if let Some(schur) = Schur::try_new(m.clone(), T::default_epsilon(), 2000) {
        let (_, t) = schur.unpack();
        return (0..t.nrows()).fold(T::zero(), |acc, i| max(acc, t[(i, i)].norm_sqr().sqrt()));
    }
    gelfand_radius(m)
}

pub(crate) fn gelfand_radius<T: Real>(m: &CMatrix<T>) -> T {
    let mut b = m.clone();
    let mut log_scale = T::zero();
    let mut weight = T::one();
    for _ in 0..64 {
        let nrm = frobenius(&b);
        if nrm == T::zero() {
            return T::zero();
        }
        b /= nrm.cplx();
        log_scale += weight * nrm.ln();
        b = &b * &b;
        weight /= T::lit(2.0);
    }
    let nrm = frobenius(&b);
    if nrm == T::zero() {
        return T::zero();
    }
    (log_scale + weight * nrm.ln()).exp()
}

/// sqrt(tr XᴴGX).
pub(crate) fn metric_norm<T: Real>(g: &CMatrix<T>, x: &CMatrix<T>) -> T {
    let q = x.adjoint() * g * x;
    let mut tr = T::zero();
    for i in 0..q.nrows() {
        tr += q[(i, i)].re;
    }
    crate::numerics::max(tr, T::zero()).sqrt()
}

/// Solves γS ≈ SC in the G-metric and returns (C, relative residual).
pub(crate) fn metric_least_squares<T: Real>(
    g: &CMatrix<T>,
    s: &CMatrix<T>,
    y: &CMatrix<T>,
) -> Result<(CMatrix<T>, T)> {
    let sg = s.adjoint() * g;
    let normal = &sg * s;
    let rhs = &sg * y;
    let c = normal
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::InvalidInput("subspace Gram is singular".into()))?;
    let r = y - s * &c;
    let scale = metric_norm(g, y);
    let res = metric_norm(g, &r);
    let rel = if scale > T::zero() { res / scale } else { res };
    Ok((c, rel))
}

pub(crate) fn rel_diff<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> T {
    let scale = crate::numerics::max(T::one(), frobenius(b));
    frobenius(&(a - b)) / scale
}
