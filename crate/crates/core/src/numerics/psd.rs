use super::{eigendecompose_hermitian, max, HermitianMatrix};
use crate::{Error, Real, Result};

/// Default relative PSD tolerance.
pub const DEFAULT_PSD_TOL: f64 = 1e-10;

/// Outcome of a positive-semidefiniteness certification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdReport<T> {
    pub min_eigenvalue: T,
    pub max_eigenvalue: T,
    pub is_psd: bool,
    pub tolerance: T,
}

impl<T: Real> PsdReport<T> {
    pub fn from_extremes(min_eigenvalue: T, max_eigenvalue: T, tolerance: T) -> Self {
        let is_psd = min_eigenvalue >= -tolerance * max(T::one(), max_eigenvalue);
        Self { min_eigenvalue, max_eigenvalue, is_psd, tolerance }
    }
}

/// is_psd ⇔ λ_min ≥ −tolerance·max(1, λ_max).
pub fn certify_psd<T: Real>(m: &HermitianMatrix<T>, tolerance: T) -> Result<PsdReport<T>> {
    if !(tolerance > T::zero()) {
        return Err(Error::InvalidInput("PSD tolerance must be positive".into()));
    }
    let e = eigendecompose_hermitian(m)?;
    Ok(PsdReport::from_extremes(e.min(), e.max(), tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    #[test]
    fn identity_is_psd() {
        let r = certify_psd(&HermitianMatrix::<f64>::identity(4), 1e-10).unwrap();
        assert!(r.is_psd);
        assert!((r.min_eigenvalue - 1.0).abs() < 1e-15);
    }

    #[test]
    fn indefinite_diagonal() {
        let r = certify_psd(&HermitianMatrix::from_diagonal(&[1.0f64, -0.5]), 1e-10).unwrap();
        assert!(!r.is_psd);
        assert!((r.min_eigenvalue + 0.5).abs() < 1e-15);
    }

    #[test]
    fn rank_one_outer_product() {
        let v = [1.0f64, -2.0, 0.5];
        let m = DMatrix::from_fn(3, 3, |i, j| v[i] * v[j]);
        let r = certify_psd(&HermitianMatrix::from_real(m).unwrap(), 1e-10).unwrap();
        assert!(r.is_psd);
        assert!(r.min_eigenvalue.abs() < 1e-14);
    }

    #[test]
    fn rejects_nonpositive_tolerance() {
        assert!(certify_psd(&HermitianMatrix::<f64>::identity(1), 0.0).is_err());
    }
}
