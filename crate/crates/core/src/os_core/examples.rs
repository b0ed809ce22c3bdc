use num_complex::Complex;

use crate::numerics::HermitianMatrix;
use crate::os_core::{OsSystem, Semigroup};
use crate::{CMatrix, Real, Result};

/// J = I, K₀ = H = ℂⁿ, U(t) = I.
pub fn trivial_system<T: Real>(n: usize) -> Result<OsSystem<T>> {
    let id = CMatrix::<T>::identity(n, n);
    OsSystem::new(
        HermitianMatrix::identity(n),
        id.clone(),
        id,
        Some(Semigroup::Generator(CMatrix::zeros(n, n))),
    )
}

/// ℂ² with J the coordinate swap, U(t) = diag(e^{it}, e^{−it}) and
/// K₀ = span(e₁ + e₂).
pub fn swap_phase_system<T: Real>() -> Result<OsSystem<T>> {
    let one = T::one().cplx();
    let zero = T::zero().cplx();
    let j = CMatrix::from_row_slice(2, 2, &[zero, one, one, zero]);
    let s = CMatrix::from_column_slice(2, 1, &[one, one]);
    let i = Complex::new(T::zero(), T::one());
    let a = CMatrix::from_row_slice(2, 2, &[i, zero, zero, -i]);
    OsSystem::new(HermitianMatrix::identity(2), j, s, Some(Semigroup::Generator(a)))
}

/// Cyclic shift on n grid points x_k = k − n/2 with J f(x) = f(−x) and K₀
/// the functions supported on x > 0. Samples at integer shifts |t| ≤ n.
pub fn translation_system<T: Real>(n: usize) -> Result<OsSystem<T>> {
    let one = T::one().cplx();
    let half = n / 2;
    let idx = |x: i64| -> usize { (x + half as i64).rem_euclid(n as i64) as usize };
    let mut j = CMatrix::<T>::zeros(n, n);
    for k in 0..n {
        let x = k as i64 - half as i64;
        j[(idx(-x), k)] = one;
    }
    let positive: Vec<usize> = (0..n).filter(|&k| k > half).collect();
    let mut s = CMatrix::<T>::zeros(n, positive.len());
    for (c, &k) in positive.iter().enumerate() {
        s[(k, c)] = one;
    }
    let shift = |m: i64| {
        let mut u = CMatrix::<T>::zeros(n, n);
        for k in 0..n {
            u[((k as i64 + m).rem_euclid(n as i64) as usize, k)] = one;
        }
        u
    };
    let samples = (-(n as i64)..=(n as i64))
        .map(|m| (T::lit(m as f64), shift(m)))
        .collect();
    OsSystem::new(HermitianMatrix::identity(n), j, s, Some(Semigroup::Samples(samples)))
}

/// H = ℂᵏ ⊕ ℂᵏ with Gram [[2D, D], [D, 2D]], J the block swap, K₀ the first
/// summand and U(t) = diag(e^{−tE}, e^{tE}). The J-form on K₀ is D and the
/// induced generator is E.
pub fn doubled_system<T: Real>(d: &[T], rates: &[T]) -> Result<OsSystem<T>> {
    let gen = CMatrix::<T>::from_fn(2 * d.len(), 2 * d.len(), |r, c| {
        let k = d.len();
        if r != c {
            T::zero().cplx()
        } else if r < k {
            (-rates[r]).cplx()
        } else {
            rates[r - k].cplx()
        }
    });
    doubled_with(d, Semigroup::Generator(gen))
}

pub(crate) fn doubled_with<T: Real>(d: &[T], semigroup: Semigroup<T>) -> Result<OsSystem<T>> {
    let k = d.len();
    let n = 2 * k;
    let two = T::lit(2.0);
    let mut g = CMatrix::<T>::zeros(n, n);
    let mut j = CMatrix::<T>::zeros(n, n);
    let mut s = CMatrix::<T>::zeros(n, k);
    for i in 0..k {
        g[(i, i)] = (two * d[i]).cplx();
        g[(i + k, i + k)] = (two * d[i]).cplx();
        g[(i, i + k)] = d[i].cplx();
        g[(i + k, i)] = d[i].cplx();
        j[(i, i + k)] = T::one().cplx();
        j[(i + k, i)] = T::one().cplx();
        s[(i, i)] = T::one().cplx();
    }
    OsSystem::new(HermitianMatrix::new(g)?, j, s, Some(semigroup))
}
