use num_complex::Complex;

use crate::numerics::{certify_psd, eigendecompose_hermitian, max, HermitianMatrix, PsdReport, DEFAULT_PSD_TOL};
use crate::os_core::OsSystem;
use crate::{CMatrix, Error, Real, Result};

/// Relative cutoff below which an equilibrated J-form eigenvalue counts as null.
pub const NULL_TOL: f64 = 1e-12;

/// Diagonal entries below this fraction of the largest are treated as exact zeros.
const DIAG_FLOOR: f64 = 1e-28;

/// The quotient K = (K₀/N)~ in orthonormal coordinates.
#[derive(Debug, Clone)]
pub struct QuotientSpace<T: Real> {
    /// ⟨u, Jv⟩ on subspace coordinates.
    pub j_gram: HermitianMatrix<T>,
    pub null_dim: usize,
    /// β: subspace coordinates → quotient coordinates (rows = dim K).
    pub quotient_basis: CMatrix<T>,
    /// Right inverse of β: quotient coordinates → subspace coordinates.
    pub lift: CMatrix<T>,
    /// Columns span N in subspace coordinates.
    pub null_basis: CMatrix<T>,
    pub null_tolerance: T,
    /// Certification of ⟨v,v⟩ − ⟨v,Jv⟩ ≥ 0 on K₀ (β is a contraction).
    pub contraction: Option<PsdReport<T>>,
}

impl<T: Real> QuotientSpace<T> {
    pub fn dim(&self) -> usize {
        self.quotient_basis.nrows()
    }

    pub fn subspace_dim(&self) -> usize {
        self.quotient_basis.ncols()
    }

    /// Gram of β applied to the given subspace-coordinate vectors.
    pub fn gram_of(&self, x: &CMatrix<T>) -> CMatrix<T> {
        let y = &self.quotient_basis * x;
        y.adjoint() * y
    }
}

fn not_positive<T: Real>(value: T, v: impl Iterator<Item = Complex<T>>) -> Error {
    Error::NotPositive {
        min_eigenvalue: value.as_f64(),
        eigenvector: v.map(|z| (z.re.as_f64(), z.im.as_f64())).collect(),
    }
}

/// Builds β from the J-form Gram alone.
///
/// Null directions are detected on the Jacobi-equilibrated form
/// D^{-1/2} M D^{-1/2}, D = diag M.
pub fn quotient_from_gram<T: Real>(j_gram: HermitianMatrix<T>) -> Result<QuotientSpace<T>> {
    let k = j_gram.dim();
    let tol = T::lit(DEFAULT_PSD_TOL);
    let raw = eigendecompose_hermitian(&j_gram)?;
    if raw.min() < -tol * max(T::one(), raw.max()) {
        return Err(not_positive(raw.min(), raw.vectors.column(0).iter().copied()));
    }
    let diag: Vec<T> = (0..k).map(|i| j_gram.get(i, i).re).collect();
    let dmax = diag.iter().fold(T::zero(), |a, &b| max(a, b));
    let cut = T::lit(DIAG_FLOOR) * dmax;
    let active: Vec<usize> = (0..k).filter(|&i| dmax > T::zero() && diag[i] > cut).collect();
    let inactive: Vec<usize> = (0..k).filter(|i| !active.contains(i)).collect();
    let m = active.len();
    let inv_sqrt: Vec<T> = active.iter().map(|&i| T::one() / diag[i].sqrt()).collect();
    let scaled = CMatrix::<T>::from_fn(m, m, |r, c| {
        j_gram.get(active[r], active[c]) * (inv_sqrt[r] * inv_sqrt[c])
    });
    let eq = eigendecompose_hermitian(&HermitianMatrix::new(scaled)?)?;
    let mu_max = eq.max();
    if m > 0 && eq.min() < -tol * max(T::one(), mu_max) {
        let mut x = vec![T::zero().cplx(); k];
        for (r, &i) in active.iter().enumerate() {
            x[i] = eq.vectors[(r, 0)] * inv_sqrt[r];
        }
        return Err(not_positive(eq.min(), x.into_iter()));
    }
    let null_cut = T::lit(NULL_TOL) * mu_max;
    let pos: Vec<usize> = (0..m).filter(|&c| eq.values[c] > null_cut).collect();
    let zer: Vec<usize> = (0..m).filter(|&c| eq.values[c] <= null_cut).collect();
    let r = pos.len();
    let mut beta = CMatrix::<T>::zeros(r, k);
    let mut lift = CMatrix::<T>::zeros(k, r);
    for (q, &c) in pos.iter().enumerate() {
        let lam = eq.values[c];
        let sl = lam.sqrt();
        for (row, &i) in active.iter().enumerate() {
            let v = eq.vectors[(row, c)];
            let dsq = diag[i].sqrt();
            beta[(q, i)] = v.conj() * (sl * dsq);
            lift[(i, q)] = v * (inv_sqrt[row] / sl);
        }
    }
    let mut null_basis = CMatrix::<T>::zeros(k, inactive.len() + zer.len());
    for (c, &i) in inactive.iter().enumerate() {
        null_basis[(i, c)] = T::one().cplx();
    }
    for (c, &z) in zer.iter().enumerate() {
        let col = inactive.len() + c;
        for (row, &i) in active.iter().enumerate() {
            null_basis[(i, col)] = eq.vectors[(row, z)] * inv_sqrt[row];
        }
        let nrm = null_basis.column(col).norm();
        if nrm > T::zero() {
            null_basis.column_mut(col).iter_mut().for_each(|v| *v /= nrm.cplx());
        }
    }
    Ok(QuotientSpace {
        j_gram,
        null_dim: k - r,
        quotient_basis: beta,
        lift,
        null_basis,
        null_tolerance: T::lit(NULL_TOL),
        contraction: None,
    })
}

/// Forms the J-form on K₀, divides out its null space and certifies that
/// the quotient map is a contraction.
pub fn build_quotient<T: Real>(system: &OsSystem<T>) -> Result<QuotientSpace<T>> {
    let jg = system.j_gram()?;
    let s = system.subspace();
    let plain = s.adjoint() * system.ambient_gram().matrix() * s;
    let gap = HermitianMatrix::with_tolerance(plain - jg.matrix(), T::lit(1e-10))?;
    let contraction = certify_psd(&gap, T::lit(DEFAULT_PSD_TOL))?;
    let mut q = quotient_from_gram(jg)?;
    q.contraction = Some(contraction);
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::frobenius;

    #[test]
    fn identity_gram_has_no_null() {
        let q = quotient_from_gram(HermitianMatrix::<f64>::identity(3)).unwrap();
        assert_eq!(q.null_dim, 0);
        assert_eq!(q.dim(), 3);
        assert!(frobenius(&(q.gram_of(&CMatrix::identity(3, 3)) - CMatrix::identity(3, 3))) < 1e-14);
    }

    #[test]
    fn rank_one_diagonal() {
        let q = quotient_from_gram(HermitianMatrix::from_diagonal(&[1.0, 0.0])).unwrap();
        assert_eq!(q.null_dim, 1);
        assert_eq!(q.dim(), 1);
        assert_eq!(q.dim() + q.null_dim, 2);
    }

    #[test]
    fn indefinite_form_is_rejected_with_witness() {
        let m = CMatrix::<f64>::from_row_slice(
            2,
            2,
            &[0.0, 1.0, 1.0, 0.0].map(|x| Complex::new(x, 0.0)),
        );
        match quotient_from_gram(HermitianMatrix::new(m).unwrap()) {
            Err(Error::NotPositive { min_eigenvalue, eigenvector }) => {
                assert!((min_eigenvalue + 1.0).abs() < 1e-12);
                assert_eq!(eigenvector.len(), 2);
            }
            other => panic!("expected NotPositive, got {other:?}"),
        }
    }

    #[test]
    fn badly_scaled_diagonal_keeps_every_direction() {
        let d: Vec<f64> = (0..11).map(|n| 10f64.powi(n) * 0.1).collect();
        let q = quotient_from_gram(HermitianMatrix::from_diagonal(&d)).unwrap();
        assert_eq!(q.null_dim, 0);
    }

    #[test]
    fn beta_and_lift_are_inverse_on_the_quotient() {
        let v = [Complex::new(1.0, 0.5), Complex::new(-2.0, 0.0), Complex::new(0.0, 1.0)];
        let w = [Complex::new(0.0, 1.0), Complex::new(1.0, 1.0), Complex::new(3.0, 0.0)];
        let m = CMatrix::from_fn(3, 3, |i, j| v[i] * v[j].conj() + w[i] * w[j].conj());
        let q = quotient_from_gram(HermitianMatrix::new(m.clone()).unwrap()).unwrap();
        assert_eq!(q.null_dim, 1);
        let bl = &q.quotient_basis * &q.lift;
        assert!(frobenius(&(bl - CMatrix::identity(2, 2))) < 1e-12);
        assert!(frobenius(&(&q.quotient_basis * &q.null_basis)) < 1e-12);
        assert!(frobenius(&(q.gram_of(&CMatrix::identity(3, 3)) - m)) < 1e-12);
    }
}
