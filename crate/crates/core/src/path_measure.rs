//! The free Gaussian path measure: Ornstein–Uhlenbeck covariance, its
//! characteristic functional and the two positivity conditions.

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::numerics::{certify_psd, eigendecompose_hermitian, max, HermitianMatrix, PsdReport, DEFAULT_PSD_TOL};
use crate::{Error, Real, Result};

/// Finite combination f = Σ cᵢ δ_{tᵢ} of point evaluations.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction<T> {
    times: Vec<T>,
    coefficients: Vec<Complex<T>>,
}

impl<T: Real> TestFunction<T> {
    pub fn new(times: Vec<T>, coefficients: Vec<Complex<T>>) -> Result<Self> {
        if times.len() != coefficients.len() {
            return Err(Error::InvalidInput("one coefficient per time".into()));
        }
        if times.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidInput("times must be strictly increasing".into()));
        }
        if times.iter().any(|t| !t.is_finite())
            || coefficients.iter().any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidInput("times and coefficients must be finite".into()));
        }
        Ok(Self { times, coefficients })
    }

    pub fn real(times: Vec<T>, coefficients: Vec<T>) -> Result<Self> {
        Self::new(times, coefficients.into_iter().map(|c| c.cplx()).collect())
    }

    pub fn zero() -> Self {
        Self { times: vec![], coefficients: vec![] }
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    pub fn coefficients(&self) -> &[Complex<T>] {
        &self.coefficients
    }

    pub fn neg(&self) -> Self {
        Self { times: self.times.clone(), coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }

    /// Time reflection (θf)(s) = f(−s).
    pub fn reflect(&self) -> Self {
        let mut pairs: Vec<(T, Complex<T>)> =
            self.times.iter().zip(&self.coefficients).map(|(&t, &c)| (-t, c)).collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
        Self { times: pairs.iter().map(|p| p.0).collect(), coefficients: pairs.iter().map(|p| p.1).collect() }
    }

    /// Pointwise sum, merging coincident atoms.
    pub fn add(&self, other: &Self) -> Self {
        let mut pairs: Vec<(T, Complex<T>)> = self
            .times
            .iter()
            .zip(&self.coefficients)
            .chain(other.times.iter().zip(&other.coefficients))
            .map(|(&t, &c)| (t, c))
            .collect();
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));
        let mut times: Vec<T> = Vec::new();
        let mut coefficients: Vec<Complex<T>> = Vec::new();
        for (t, c) in pairs {
            if times.last() == Some(&t) {
                *coefficients.last_mut().expect("nonempty") += c;
            } else {
                times.push(t);
                coefficients.push(c);
            }
        }
        Self { times, coefficients }
    }
}

/// ½ e^{−|t₁−t₂|}.
pub fn ou_covariance<T: Real>(t1: T, t2: T) -> T {
    T::lit(0.5) * (-(t1 - t2).abs()).exp()
}

fn check_distinct<T: Real>(times: &[T]) -> Result<()> {
    let mut sorted = times.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    if times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidInput("times must be finite".into()));
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("duplicate times".into()));
    }
    Ok(())
}

/// [C(tᵢ, tⱼ)] and its PSD certificate.
pub fn covariance_gram<T: Real>(times: &[T]) -> Result<(HermitianMatrix<T>, PsdReport<T>)> {
    check_distinct(times)?;
    let n = times.len();
    let m = HermitianMatrix::from_real(DMatrix::from_fn(n, n, |i, j| ou_covariance(times[i], times[j])))?;
    let r = certify_psd(&m, T::lit(DEFAULT_PSD_TOL))?;
    Ok((m, r))
}

/// Reflection Gram [C(−tᵢ, tⱼ)] for positive times.
#[derive(Debug, Clone)]
pub struct ReflectionGram<T: Real> {
    pub matrix: HermitianMatrix<T>,
    pub psd: PsdReport<T>,
    /// Number of eigenvalues above tolerance·max(1, λ_max).
    pub numerical_rank: usize,
    pub rank_one: bool,
}

pub fn reflection_gram<T: Real>(times: &[T]) -> Result<ReflectionGram<T>> {
    check_distinct(times)?;
    if times.iter().any(|&t| !(t > T::zero())) {
        return Err(Error::InvalidInput("reflection Gram needs strictly positive times".into()));
    }
    let n = times.len();
    let matrix =
        HermitianMatrix::from_real(DMatrix::from_fn(n, n, |i, j| ou_covariance(-times[i], times[j])))?;
    let tol = T::lit(DEFAULT_PSD_TOL);
    let e = eigendecompose_hermitian(&matrix)?;
    let psd = PsdReport::from_extremes(e.min(), e.max(), tol);
    let cut = tol * max(T::one(), e.max());
    let numerical_rank = e.values.iter().filter(|&&v| v > cut).count();
    Ok(ReflectionGram { matrix, psd, numerical_rank, rank_one: numerical_rank <= 1 })
}

/// S(f) = exp(−½ Σ cᵢ cⱼ C(tᵢ, tⱼ)) for real-coefficient f.
pub fn schwinger_functional<T: Real>(f: &TestFunction<T>) -> Result<T> {
    if f.coefficients.iter().any(|c| c.im != T::zero()) {
        return Err(Error::InvalidInput("characteristic functional needs real coefficients".into()));
    }
    let mut q = T::zero();
    for (i, &ti) in f.times.iter().enumerate() {
        for (j, &tj) in f.times.iter().enumerate() {
            q += f.coefficients[i].re * f.coefficients[j].re * ou_covariance(ti, tj);
        }
    }
    Ok((-T::lit(0.5) * q).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covariance_values() {
        assert_eq!(ou_covariance(0.0f64, 0.0), 0.5);
        assert!((ou_covariance(0.0f64, 2f64.ln()) - 0.25).abs() < 1e-16);
        assert_eq!(ou_covariance(0.3f64, -1.7), ou_covariance(-1.7, 0.3));
    }

    #[test]
    fn covariance_gram_small_cases() {
        let (m, r) = covariance_gram(&[0.0f64]).unwrap();
        assert_eq!(m.get(0, 0).re, 0.5);
        assert!(r.is_psd);
        let (m, r) = covariance_gram(&[0.0f64, 1.0]).unwrap();
        let e = (-1.0f64).exp();
        assert!((m.get(0, 1).re - 0.5 * e).abs() < 1e-16);
        let det = m.get(0, 0).re * m.get(1, 1).re - m.get(0, 1).norm_sqr();
        assert!((det - 0.25 * (1.0 - e * e)).abs() < 1e-15);
        assert!(r.is_psd);
        assert!(covariance_gram(&[1.0f64, 2.0, 1.0]).is_err());
    }

    #[test]
    fn reflection_gram_is_rank_one() {
        let r = reflection_gram(&[1.0f64]).unwrap();
        assert!((r.matrix.get(0, 0).re - 0.5 * (-2.0f64).exp()).abs() < 1e-16);
        let r = reflection_gram(&[1.0f64, 2.0]).unwrap();
        let v = [(-1.0f64).exp(), (-2.0f64).exp()];
        for i in 0..2 {
            for j in 0..2 {
                assert!((r.matrix.get(i, j).re - 0.5 * v[i] * v[j]).abs() < 1e-16);
            }
        }
        assert!(r.psd.is_psd && r.rank_one);
        assert!(reflection_gram(&[0.0f64, 1.0]).is_err());
        assert!(reflection_gram(&[-1.0f64]).is_err());
    }

    #[test]
    fn schwinger_values() {
        assert_eq!(schwinger_functional(&TestFunction::<f64>::zero()).unwrap(), 1.0);
        let f = TestFunction::real(vec![0.0f64], vec![1.0]).unwrap();
        assert!((schwinger_functional(&f).unwrap() - (-0.25f64).exp()).abs() < 1e-16);
        let g = TestFunction::real(vec![-1.0f64, 0.5, 3.0], vec![0.3, -2.0, 1.1]).unwrap();
        assert_eq!(schwinger_functional(&g).unwrap(), schwinger_functional(&g.neg()).unwrap());
        let c = TestFunction::new(vec![0.0f64], vec![Complex::new(0.0, 1.0)]).unwrap();
        assert!(schwinger_functional(&c).is_err());
    }

    #[test]
    fn test_function_invariants() {
        assert!(TestFunction::real(vec![1.0f64, 1.0], vec![1.0, 1.0]).is_err());
        assert!(TestFunction::real(vec![1.0f64], vec![f64::NAN]).is_err());
        let f = TestFunction::real(vec![1.0f64, 2.0], vec![1.0, 1.0]).unwrap();
        let g = f.reflect();
        assert_eq!(g.times(), &[-2.0, -1.0]);
        assert_eq!(f.add(&f.neg()).coefficients().iter().map(|c| c.norm()).sum::<f64>(), 0.0);
    }
}
