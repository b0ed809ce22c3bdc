use crate::{Error, Result, C64};

/// F(z) = Σ a_k zᵏ/√(k!), orthonormal in the Fock norm ∫|F|²e^{−|z|²}dA/π.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    coefficients: Vec<C64>,
}

impl FockVector {
    pub fn new(coefficients: Vec<C64>) -> Self {
        Self { coefficients }
    }

    /// zⁿ/√(n!) truncated at `degree`.
    pub fn monomial(n: usize, degree: usize) -> Result<Self> {
        if n > degree {
            return Err(Error::InvalidInput("monomial degree above truncation".into()));
        }
        let mut c = vec![C64::new(0.0, 0.0); degree + 1];
        c[n] = C64::new(1.0, 0.0);
        Ok(Self::new(c))
    }

    pub fn coefficients(&self) -> &[C64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        let mut p = C64::new(1.0, 0.0);
        for (k, a) in self.coefficients.iter().enumerate() {
            if k > 0 {
                p *= z / (k as f64).sqrt();
            }
            acc += a * p;
        }
        acc
    }

    /// ⟨F, G⟩_F, conjugate-linear in F; missing coefficients count as zero.
    pub fn inner(&self, other: &Self) -> C64 {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .fold(C64::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn scale(&self, c: C64) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coefficients.len().max(other.coefficients.len());
        let z = C64::new(0.0, 0.0);
        Self::new(
            (0..n)
                .map(|k| {
                    self.coefficients.get(k).copied().unwrap_or(z) - other.coefficients.get(k).copied().unwrap_or(z)
                })
                .collect(),
        )
    }
}

/// K_w(z) = e^{z w̄}, so that ⟨K_w, F⟩_F = F(w).
pub fn fock_kernel(w: C64, degree: usize) -> FockVector {
    let wc = w.conj();
    let mut p = C64::new(1.0, 0.0);
    let mut c = Vec::with_capacity(degree + 1);
    for k in 0..=degree {
        if k > 0 {
            p *= wc / (k as f64).sqrt();
        }
        c.push(p);
    }
    FockVector::new(c)
}
