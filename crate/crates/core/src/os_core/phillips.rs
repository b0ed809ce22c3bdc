use crate::numerics::{certify_psd, HermitianMatrix, PsdReport, DEFAULT_PSD_TOL};
use crate::os_core::OsSystem;
use crate::{CMatrix, Error, Real, Result};

/// Maximal positive subspace K₀ = L²(M₀ ∪ A) of a finite involutive space.
#[derive(Debug, Clone)]
pub struct PhillipsSelection<T: Real> {
    /// Fixed points M₀ of θ.
    pub fixed: Vec<usize>,
    /// Smaller element of each 2-cycle.
    pub a: Vec<usize>,
    /// θ(A).
    pub b: Vec<usize>,
    /// Indicator basis of M₀ ∪ A, one column per point in ascending order.
    pub basis: CMatrix<T>,
    pub points: Vec<usize>,
    pub positivity: PsdReport<T>,
    pub quotient_dim: usize,
    /// Adding any point of B breaks positivity.
    pub maximal: bool,
    system: OsSystem<T>,
}

impl<T: Real> PhillipsSelection<T> {
    /// The system L²(X, m) with Jf = f∘θ and K₀ the selection.
    pub fn system(&self) -> &OsSystem<T> {
        &self.system
    }
}

fn indicator_basis<T: Real>(n: usize, pts: &[usize]) -> CMatrix<T> {
    let mut s = CMatrix::<T>::zeros(n, pts.len());
    for (c, &p) in pts.iter().enumerate() {
        s[(p, c)] = T::one().cplx();
    }
    s
}

/// Selects M₀ ∪ A for the involution `theta` on points 0..n with the given masses.
pub fn phillips_max_subspace<T: Real>(theta: &[usize], masses: &[T]) -> Result<PhillipsSelection<T>> {
    let n = theta.len();
    if n == 0 || masses.len() != n {
        return Err(Error::InvalidInput("need one mass per point".into()));
    }
    if theta.iter().any(|&t| t >= n) || (0..n).any(|i| theta[theta[i]] != i) {
        return Err(Error::NonInvolutive);
    }
    if masses.iter().any(|&m| !(m > T::zero())) {
        return Err(Error::InvalidInput("masses must be positive".into()));
    }
    if (0..n).any(|i| masses[i] != masses[theta[i]]) {
        return Err(Error::InvalidInput("masses must be θ-invariant".into()));
    }
    let fixed: Vec<usize> = (0..n).filter(|&i| theta[i] == i).collect();
    let a: Vec<usize> = (0..n).filter(|&i| i < theta[i]).collect();
    let b: Vec<usize> = a.iter().map(|&i| theta[i]).collect();
    let mut points: Vec<usize> = fixed.iter().chain(&a).copied().collect();
    points.sort_unstable();

    let gram = HermitianMatrix::from_diagonal(masses);
    let mut j = CMatrix::<T>::zeros(n, n);
    for i in 0..n {
        j[(theta[i], i)] = T::one().cplx();
    }
    let basis = indicator_basis::<T>(n, &points);
    let system = OsSystem::new(gram.clone(), j.clone(), basis.clone(), None)?;
    let jg = system.j_gram()?;
    let tol = T::lit(DEFAULT_PSD_TOL);
    let positivity = certify_psd(&jg, tol)?;
    let quotient_dim = (0..jg.dim()).filter(|&i| jg.get(i, i).re > T::zero()).count();

    let mut maximal = true;
    for &extra in &b {
        let mut pts = points.clone();
        pts.push(extra);
        let s = indicator_basis::<T>(n, &pts);
        let m = s.adjoint() * gram.matrix() * &j * &s;
        if certify_psd(&HermitianMatrix::new(m)?, tol)?.is_psd {
            maximal = false;
        }
    }
    Ok(PhillipsSelection { fixed, a, b, basis, points, positivity, quotient_dim, maximal, system })
}
