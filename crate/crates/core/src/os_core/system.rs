use crate::numerics::{certify_psd, frobenius, HermitianMatrix, DEFAULT_PSD_TOL};
use crate::os_core::linalg::rel_diff;
use crate::{CMatrix, Error, Real, Result};

/// One-parameter family t ↦ U(t).
#[derive(Debug, Clone)]
pub enum Semigroup<T: Real> {
    /// U(t) = exp(tA).
    Generator(CMatrix<T>),
    /// U at the listed times.
    Samples(Vec<(T, CMatrix<T>)>),
    /// Samples that must agree with exp(tA).
    Both { generator: CMatrix<T>, samples: Vec<(T, CMatrix<T>)> },
}

const SAMPLE_CONSISTENCY_TOL: f64 = 1e-8;

/// Finite-dimensional reflection datum (H, J, K₀, U).
#[derive(Debug, Clone)]
pub struct OsSystem<T: Real> {
    ambient_gram: HermitianMatrix<T>,
    reflection: CMatrix<T>,
    subspace: CMatrix<T>,
    semigroup: Option<Semigroup<T>>,
}

impl<T: Real> OsSystem<T> {
    pub fn new(
        ambient_gram: HermitianMatrix<T>,
        reflection: CMatrix<T>,
        subspace: CMatrix<T>,
        semigroup: Option<Semigroup<T>>,
    ) -> Result<Self> {
        let n = ambient_gram.dim();
        if n == 0 {
            return Err(Error::InvalidInput("ambient space must be nonzero".into()));
        }
        if reflection.shape() != (n, n) {
            return Err(Error::InvalidInput("reflection must be square of ambient size".into()));
        }
        if subspace.nrows() != n || subspace.ncols() == 0 {
            return Err(Error::InvalidInput("subspace basis must have ambient rows and ≥ 1 column".into()));
        }
        if !certify_psd(&ambient_gram, T::lit(DEFAULT_PSD_TOL))?.is_psd {
            return Err(Error::InvalidInput("ambient Gram is not positive semidefinite".into()));
        }
        let id = CMatrix::<T>::identity(n, n);
        if rel_diff(&(&reflection * &reflection), &id) > T::lit(1e-10) {
            return Err(Error::InvalidInput("reflection does not square to the identity".into()));
        }
        let g = ambient_gram.matrix();
        if rel_diff(&(reflection.adjoint() * g * &reflection), g) > T::lit(1e-10) {
            return Err(Error::InvalidInput("reflection is not unitary for the ambient Gram".into()));
        }
        check_independent(&subspace)?;
        if let Some(sg) = &semigroup {
            check_semigroup(sg, n)?;
        }
        Ok(Self { ambient_gram, reflection, subspace, semigroup })
    }

    pub fn dim(&self) -> usize {
        self.ambient_gram.dim()
    }

    pub fn subspace_dim(&self) -> usize {
        self.subspace.ncols()
    }

    pub fn ambient_gram(&self) -> &HermitianMatrix<T> {
        &self.ambient_gram
    }

    pub fn reflection(&self) -> &CMatrix<T> {
        &self.reflection
    }

    pub fn subspace(&self) -> &CMatrix<T> {
        &self.subspace
    }

    pub fn semigroup(&self) -> Option<&Semigroup<T>> {
        self.semigroup.as_ref()
    }

    pub fn with_semigroup(mut self, semigroup: Semigroup<T>) -> Result<Self> {
        check_semigroup(&semigroup, self.dim())?;
        self.semigroup = Some(semigroup);
        Ok(self)
    }

    /// The J-form SᴴGJS on subspace coordinates.
    pub fn j_gram(&self) -> Result<HermitianMatrix<T>> {
        let s = &self.subspace;
        let m = s.adjoint() * self.ambient_gram.matrix() * &self.reflection * s;
        HermitianMatrix::with_tolerance(m, T::lit(1e-10))
    }

    /// U(t); errors if the family has no value at t.
    pub fn u(&self, t: T) -> Result<CMatrix<T>> {
        match &self.semigroup {
            None => Err(Error::MissingSample { t: t.as_f64() }),
            Some(Semigroup::Generator(a)) | Some(Semigroup::Both { generator: a, .. }) => {
                Ok((a * t.cplx()).exp())
            }
            Some(Semigroup::Samples(samples)) => lookup(samples, t),
        }
    }

    /// Sample times available without a generator.
    pub fn sample_times(&self) -> Vec<T> {
        match &self.semigroup {
            Some(Semigroup::Samples(s)) | Some(Semigroup::Both { samples: s, .. }) => {
                s.iter().map(|(t, _)| *t).collect()
            }
            _ => Vec::new(),
        }
    }
}


fn lookup<T: Real>(samples: &[(T, CMatrix<T>)], t: T) -> Result<CMatrix<T>> {
    let tol = T::lit(1e-12) * crate::numerics::max(T::one(), t.abs());
    samples
        .iter()
        .find(|(ts, _)| (*ts - t).abs() <= tol)
        .map(|(_, m)| m.clone())
        .ok_or(Error::MissingSample { t: t.as_f64() })
}

fn check_independent<T: Real>(s: &CMatrix<T>) -> Result<()> {
    let sv = s.clone().svd(false, false).singular_values;
    let smax = sv.iter().fold(T::zero(), |a, &b| crate::numerics::max(a, b));
    let smin = sv.iter().fold(smax, |a, &b| if b < a { b } else { a });
    if !(smax > T::zero()) || smin <= T::lit(1e-12) * smax {
        return Err(Error::InvalidInput("subspace columns are linearly dependent".into()));
    }
    Ok(())
}

fn check_semigroup<T: Real>(sg: &Semigroup<T>, n: usize) -> Result<()> {
    let shape_ok = |m: &CMatrix<T>| m.shape() == (n, n);
    match sg {
        Semigroup::Generator(a) => {
            if !shape_ok(a) {
                return Err(Error::InvalidInput("generator has wrong shape".into()));
            }
        }
        Semigroup::Samples(s) => {
            if s.iter().any(|(_, m)| !shape_ok(m)) {
                return Err(Error::InvalidInput("semigroup sample has wrong shape".into()));
            }
        }
        Semigroup::Both { generator, samples } => {
            if !shape_ok(generator) || samples.iter().any(|(_, m)| !shape_ok(m)) {
                return Err(Error::InvalidInput("semigroup matrices have wrong shape".into()));
            }
            for (t, m) in samples {
                let e = (generator * t.cplx()).exp();
                let scale = crate::numerics::max(T::one(), frobenius(m));
                let d = frobenius(&(e - m)) / scale;
                if d > T::lit(SAMPLE_CONSISTENCY_TOL) {
                    return Err(Error::InconsistentSamples { disagreement: d.as_f64() });
                }
            }
        }
    }
    Ok(())
}
