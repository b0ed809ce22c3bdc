use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;

use crate::{CMatrix, Error, Real, Result};

/// Frobenius norm of a complex matrix.
pub fn frobenius<T: Real>(m: &CMatrix<T>) -> T {
    m.iter()
        .fold(T::zero(), |acc, z| acc + z.norm_sqr())
        .sqrt()
}

/// Square complex matrix stored exactly conjugate-symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T: Real> {
    m: CMatrix<T>,
}

impl<T: Real> HermitianMatrix<T> {
    /// Accepts `m` when its symmetry residual is at most 1e−12·‖m‖_F and
    /// stores the exact Hermitian part.
    pub fn new(m: CMatrix<T>) -> Result<Self> {
        Self::with_tolerance(m, T::lit(1e-12))
    }

    pub fn with_tolerance(m: CMatrix<T>, rel_tol: T) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::InvalidInput("Hermitian matrix must be square".into()));
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        let adj = m.adjoint();
        let residual = frobenius(&(&m - &adj));
        let scale = frobenius(&m);
        if residual > rel_tol * scale {
            return Err(Error::NotHermitian { residual: residual.as_f64() });
        }
        let half = T::lit(0.5);
        let sym = (&m + &adj).map(|z| z * half);
        Ok(Self { m: sym })
    }

    pub fn from_real(m: DMatrix<T>) -> Result<Self> {
        Self::new(m.map(|x| Complex::new(x, T::zero())))
    }

    pub fn identity(n: usize) -> Self {
        Self { m: CMatrix::identity(n, n) }
    }

    pub fn from_diagonal(d: &[T]) -> Self {
        let n = d.len();
        let mut m = CMatrix::zeros(n, n);
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = Complex::new(x, T::zero());
        }
        Self { m }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.m[(i, j)]
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.m
    }
}

/// Eigenpairs of a Hermitian matrix with ascending eigenvalues.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T: Real> {
    pub values: Vec<T>,
    /// Columns are orthonormal eigenvectors in the order of `values`.
    pub vectors: CMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    pub fn min(&self) -> T {
        self.values.first().copied().unwrap_or_else(T::zero)
    }

    pub fn max(&self) -> T {
        self.values.last().copied().unwrap_or_else(T::zero)
    }

    pub fn reconstruct(&self) -> CMatrix<T> {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            let lam = self.values[j];
            scaled.column_mut(j).iter_mut().for_each(|z| *z *= lam);
        }
        scaled * self.vectors.adjoint()
    }
}

pub fn eigendecompose_hermitian<T: Real>(m: &HermitianMatrix<T>) -> Result<HermitianEigen<T>> {
    let n = m.dim();
    if n == 0 {
        return Ok(HermitianEigen { values: vec![], vectors: CMatrix::zeros(0, 0) });
    }
    let eig = SymmetricEigen::try_new(m.matrix().clone(), T::default_epsilon(), 0)
        .ok_or_else(|| Error::Eigensolver("QR iteration did not converge".into()))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn herm(rows: &[&[f64]]) -> HermitianMatrix<f64> {
        let n = rows.len();
        HermitianMatrix::from_real(DMatrix::from_fn(n, n, |i, j| rows[i][j])).unwrap()
    }

    #[test]
    fn identity_spectrum() {
        let e = eigendecompose_hermitian(&HermitianMatrix::<f64>::identity(3)).unwrap();
        assert_eq!(e.values.len(), 3);
        assert!(e.values.iter().all(|&v| (v - 1.0).abs() < 1e-15));
    }

    #[test]
    fn diagonal_sorted() {
        let e = eigendecompose_hermitian(&herm(&[&[2.0, 0.0], &[0.0, -1.0]])).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15 && (e.values[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn pauli_x() {
        let e = eigendecompose_hermitian(&herm(&[&[0.0, 1.0], &[1.0, 0.0]])).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15 && (e.values[1] - 1.0).abs() < 1e-15);
        assert!(frobenius(&(e.reconstruct() - herm(&[&[0.0, 1.0], &[1.0, 0.0]]).m)) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::<f64>::from_fn(2, 2, |i, j| Complex::new((i * 2 + j) as f64, 0.0));
        assert!(matches!(HermitianMatrix::new(m), Err(Error::NotHermitian { .. })));
        let rect = CMatrix::<f64>::zeros(2, 3);
        assert!(HermitianMatrix::new(rect).is_err());
    }

    #[test]
    fn stores_exact_conjugate_symmetry() {
        let mut m = CMatrix::<f64>::identity(2, 2);
        m[(0, 1)] = Complex::new(0.5, 0.25);
        m[(1, 0)] = Complex::new(0.5, -0.25 + 1e-15);
        let h = HermitianMatrix::new(m).unwrap();
        assert_eq!(h.get(0, 1), h.get(1, 0).conj());
    }

    #[test]
    fn complex_hermitian_in_single_precision() {
        let mut m = CMatrix::<f32>::zeros(2, 2);
        m[(0, 1)] = Complex::new(0.0, 1.0);
        m[(1, 0)] = Complex::new(0.0, -1.0);
        let e = eigendecompose_hermitian(&HermitianMatrix::new(m).unwrap()).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-6 && (e.values[1] - 1.0).abs() < 1e-6);
    }
}
