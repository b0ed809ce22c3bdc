use crate::numerics::{certify_psd, frobenius, max, PsdReport, DEFAULT_PSD_TOL};
use crate::os_core::linalg::metric_least_squares;
use crate::os_core::OsSystem;
use crate::{Error, Real, Result};

/// Residual tolerance for the axioms.
pub const AXIOM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxiomTimeReport<T> {
    pub t: T,
    /// ‖JU(t) − U(−t)J‖_F / max(1, ‖U(t)‖_F).
    pub reflection_residual: T,
    /// Relative G-norm of (I − P₀)U(t)P₀.
    pub invariance_residual: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport<T> {
    pub times: Vec<AxiomTimeReport<T>>,
    /// Certification of P₀JP₀ on K₀.
    pub positivity: PsdReport<T>,
    pub tolerance: T,
    pub passed: bool,
}

impl<T: Real> AxiomReport<T> {
    pub fn reflection_ok(&self) -> bool {
        self.times.iter().all(|r| r.reflection_residual <= self.tolerance)
    }

    pub fn invariance_ok(&self) -> bool {
        self.times.iter().all(|r| r.invariance_residual <= self.tolerance)
    }
}

/// Checks JU(t) = U(−t)J, P₀JP₀ ≥ 0 and U(t)K₀ ⊆ K₀ at each sample time.
pub fn check_axioms<T: Real>(system: &OsSystem<T>, sample_times: &[T]) -> Result<AxiomReport<T>> {
    let tol = T::lit(AXIOM_TOL);
    let g = system.ambient_gram().matrix();
    let j = system.reflection();
    let s = system.subspace();
    let mut times = Vec::with_capacity(sample_times.len());
    for &t in sample_times {
        if !t.is_finite() || t < T::zero() {
            return Err(Error::InvalidInput("sample times must be finite and nonnegative".into()));
        }
        let u = system.u(t)?;
        let u_neg = system.u(-t)?;
        let refl = frobenius(&(j * &u - &u_neg * j)) / max(T::one(), frobenius(&u));
        let (_, inv) = metric_least_squares(g, s, &(&u * s))?;
        times.push(AxiomTimeReport { t, reflection_residual: refl, invariance_residual: inv });
    }
    let positivity = certify_psd(&system.j_gram()?, T::lit(DEFAULT_PSD_TOL))?;
    let passed = positivity.is_psd
        && times.iter().all(|r| r.reflection_residual <= tol && r.invariance_residual <= tol);
    Ok(AxiomReport { times, positivity, tolerance: tol, passed })
}
