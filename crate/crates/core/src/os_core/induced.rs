use crate::numerics::{eigendecompose_hermitian, frobenius, max, HermitianMatrix};
use crate::os_core::linalg::{metric_least_squares, op_norm, spectral_radius};
use crate::os_core::{OsSystem, QuotientSpace};
use crate::{CMatrix, Error, Real, Result};

/// Value assigned to −log(μ)/t when μ < 1e−14.
pub const LOG_CAP: f64 = 1e14;
const LOG_FLOOR: f64 = 1e-14;
const RELATION_TOL: f64 = 1e-10;
const INVARIANCE_TOL: f64 = 1e-10;
const NULL_LEAK_TOL: f64 = 1e-8;
const CROSS_TOL: f64 = 1e-6;

/// How γ relates to the reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JRelation {
    /// Jγ = γJ.
    CommutesWithJ,
    /// Jγ = γ⁻¹J.
    JTwisted,
}

/// The operator γ̃ on K with β∘γ = γ̃∘β.
#[derive(Debug, Clone)]
pub struct InducedOperator<T: Real> {
    /// γ̃ in orthonormal quotient coordinates.
    pub matrix: CMatrix<T>,
    /// Norm of γ̃ for the J-inner product.
    pub j_norm: T,
    /// √ρ((γ⁻¹)*γ) for twisted γ, √ρ(γ*γ) for commuting γ.
    pub bound: T,
    /// Action of γ on subspace coordinates: γS = SC.
    pub subspace_action: CMatrix<T>,
    pub relation_residual: T,
    pub invariance_residual: T,
    /// Relative size of β C N (zero when γN ⊆ N).
    pub null_leak: T,
}

impl<T: Real> InducedOperator<T> {
    pub fn within_bound(&self, slack: T) -> bool {
        self.j_norm <= self.bound + slack
    }
}

/// Passes γ to the quotient and compares its J-norm with the Basic Lemma bound.
pub fn induce_operator<T: Real>(
    system: &OsSystem<T>,
    quotient: &QuotientSpace<T>,
    gamma: &CMatrix<T>,
    relation: JRelation,
) -> Result<InducedOperator<T>> {
    let n = system.dim();
    if gamma.shape() != (n, n) {
        return Err(Error::InvalidInput("γ must be square of ambient size".into()));
    }
    let gamma_inv = gamma
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::InvalidInput("γ is not invertible".into()))?;
    let j = system.reflection();
    let g = system.ambient_gram().matrix();
    let s = system.subspace();

    let rhs = match relation {
        JRelation::CommutesWithJ => gamma * j,
        JRelation::JTwisted => &gamma_inv * j,
    };
    let lhs = j * gamma;
    let relation_residual = frobenius(&(&lhs - &rhs)) / max(T::one(), frobenius(&lhs));
    if relation_residual > T::lit(RELATION_TOL) {
        return Err(Error::RelationViolation { residual: relation_residual.as_f64() });
    }

    let (c, invariance_residual) = metric_least_squares(g, s, &(gamma * s))?;
    if invariance_residual > T::lit(INVARIANCE_TOL) {
        return Err(Error::InvarianceViolation { residual: invariance_residual.as_f64() });
    }

    let beta = &quotient.quotient_basis;
    let matrix = beta * &c * &quotient.lift;
    let null_leak = if quotient.null_basis.ncols() == 0 {
        T::zero()
    } else {
        let leak = frobenius(&(beta * &c * &quotient.null_basis));
        let scale = max(T::one(), frobenius(&(beta * &c)));
        leak / scale
    };
    if null_leak > T::lit(NULL_LEAK_TOL) {
        return Err(Error::InvarianceViolation { residual: null_leak.as_f64() });
    }
    let j_norm = op_norm(&matrix)?;

    let g_inv = g
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::InvalidInput("ambient Gram must be invertible for the bound".into()))?;
    let a = match relation {
        JRelation::JTwisted => &g_inv * gamma_inv.adjoint() * g * gamma,
        JRelation::CommutesWithJ => &g_inv * gamma.adjoint() * g * gamma,
    };
    let bound = spectral_radius(&a).sqrt();
    Ok(InducedOperator {
        matrix,
        j_norm,
        bound,
        subspace_action: c,
        relation_residual,
        invariance_residual,
        null_leak,
    })
}

/// Spectrum of H with Û(t) = e^{−tH} on the quotient.
#[derive(Debug, Clone)]
pub struct GeneratorSpectrum<T: Real> {
    /// Ascending eigenvalues of H from the first sample time.
    pub eigenvalues: Vec<T>,
    /// Orthonormal eigenvectors in quotient coordinates, matching `eigenvalues`.
    pub eigenvectors: CMatrix<T>,
    /// The same eigenvectors mapped back to subspace coordinates.
    pub lifted_eigenvectors: CMatrix<T>,
    pub times: Vec<T>,
    /// Spectra at every sample time.
    pub spectra: Vec<Vec<T>>,
    pub disagreement: T,
    pub self_adjoint_residual: T,
    /// Largest ‖Û(t)‖ over the sample times.
    pub max_norm: T,
    /// Some eigenvalue of Û(t) fell below 1e−14 and was capped.
    pub capped: bool,
    pub nonnegative: bool,
}

fn log_spectrum<T: Real>(u_hat: &CMatrix<T>, t: T) -> Result<(Vec<T>, CMatrix<T>, bool)> {
    let e = eigendecompose_hermitian(&HermitianMatrix::with_tolerance(u_hat.clone(), T::lit(1e-8))?)?;
    let r = e.values.len();
    let mut capped = false;
    // μ ascending ⇒ −log μ / t descending; reverse for ascending H
    let mut vals = Vec::with_capacity(r);
    let mut vecs = CMatrix::<T>::zeros(u_hat.nrows(), r);
    for (out, idx) in (0..r).rev().enumerate() {
        let mu = e.values[idx];
        let h = if mu < T::lit(LOG_FLOOR) {
            capped = true;
            T::lit(LOG_CAP)
        } else {
            -mu.ln() / t
        };
        vals.push(h);
        vecs.set_column(out, &e.vectors.column(idx));
    }
    Ok((vals, vecs, capped))
}

/// Induces Û(t) at each sample time and recovers H = −log(Û(t))/t,
/// cross-validating the spectra between sample times.
pub fn induced_generator<T: Real>(
    system: &OsSystem<T>,
    quotient: &QuotientSpace<T>,
    times: &[T],
) -> Result<GeneratorSpectrum<T>> {
    if times.len() < 2 {
        return Err(Error::InvalidInput("need at least two sample times".into()));
    }
    if times.iter().any(|&t| !(t > T::zero()) || !t.is_finite()) {
        return Err(Error::InvalidInput("sample times must be positive".into()));
    }
    if (times[0] - times[1]).abs() <= T::default_epsilon() * max(T::one(), times[0]) {
        return Err(Error::InvalidInput("the first two sample times must differ".into()));
    }
    let mut spectra = Vec::with_capacity(times.len());
    let mut first: Option<(CMatrix<T>, bool)> = None;
    let mut sa_max = T::zero();
    let mut norm_max = T::zero();
    let mut capped_any = false;
    for &t in times {
        let u = system.u(t)?;
        let ind = induce_operator(system, quotient, &u, JRelation::JTwisted)?;
        let m = &ind.matrix;
        let sa = frobenius(&(m - m.adjoint())) / max(T::one(), frobenius(m));
        sa_max = max(sa_max, sa);
        if sa > T::lit(1e-10) {
            return Err(Error::NonSelfadjoint { residual: sa.as_f64() });
        }
        norm_max = max(norm_max, ind.j_norm);
        if ind.j_norm > T::one() + T::lit(1e-8) {
            return Err(Error::NonContractive { norm: ind.j_norm.as_f64() });
        }
        let (vals, vecs, capped) = log_spectrum(m, t)?;
        capped_any |= capped;
        if first.is_none() {
            first = Some((vecs, capped));
        }
        spectra.push(vals);
    }
    let mut disagreement = T::zero();
    for other in &spectra[1..] {
        for (a, b) in spectra[0].iter().zip(other) {
            if *a >= T::lit(LOG_CAP) || *b >= T::lit(LOG_CAP) {
                continue;
            }
            disagreement = max(disagreement, (*a - *b).abs() / max(T::one(), a.abs()));
        }
    }
    if disagreement > T::lit(CROSS_TOL) {
        return Err(Error::InconsistentSamples { disagreement: disagreement.as_f64() });
    }
    let (eigenvectors, _) = first.expect("at least two times");
    let lifted_eigenvectors = &quotient.lift * &eigenvectors;
    let eigenvalues = spectra[0].clone();
    let nonnegative = eigenvalues.iter().all(|&h| h >= T::lit(-1e-8));
    Ok(GeneratorSpectrum {
        eigenvalues,
        eigenvectors,
        lifted_eigenvectors,
        times: times.to_vec(),
        spectra,
        disagreement,
        self_adjoint_residual: sa_max,
        max_norm: norm_max,
        capped: capped_any,
        nonnegative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::os_core::{build_quotient, doubled_system, trivial_system};

    #[test]
    fn identity_induces_identity() {
        let sys = trivial_system::<f64>(4).unwrap();
        let q = build_quotient(&sys).unwrap();
        let id = CMatrix::<f64>::identity(4, 4);
        let ind = induce_operator(&sys, &q, &id, JRelation::JTwisted).unwrap();
        assert!(frobenius(&(ind.matrix.clone() - CMatrix::identity(4, 4))) < 1e-14);
        assert!((ind.j_norm - 1.0).abs() < 1e-14);
        assert!((ind.bound - 1.0).abs() < 1e-14);
    }

    #[test]
    fn exponential_decay_spectrum() {
        let sys = doubled_system(&[1.0f64, 1.0, 1.0], &[1.0, 1.0, 1.0]).unwrap();
        let q = build_quotient(&sys).unwrap();
        let spec = induced_generator(&sys, &q, &[0.2, 0.7]).unwrap();
        for h in &spec.eigenvalues {
            assert!((h - 1.0).abs() < 1e-12);
        }
        assert!(!spec.capped && spec.nonnegative);
    }

    #[test]
    fn relation_and_invariance_errors() {
        let sys = trivial_system::<f64>(2).unwrap();
        let q = build_quotient(&sys).unwrap();
        let g = CMatrix::<f64>::identity(2, 2) * num_complex::Complex::new(2.0, 0.0);
        // J = I demands γ = γ⁻¹ for the twisted relation
        assert!(matches!(
            induce_operator(&sys, &q, &g, JRelation::JTwisted),
            Err(Error::RelationViolation { .. })
        ));
        assert!(induce_operator(&sys, &q, &g, JRelation::CommutesWithJ).is_ok());

        let dsys = doubled_system(&[1.0f64], &[1.0]).unwrap();
        let dq = build_quotient(&dsys).unwrap();
        let one = num_complex::Complex::new(1.0, 0.0);
        let zero = num_complex::Complex::new(0.0, 0.0);
        // the swap satisfies Jγ = γ⁻¹J but moves K₀ onto the other summand
        let swap = CMatrix::from_row_slice(2, 2, &[zero, one, one, zero]);
        assert!(matches!(
            induce_operator(&dsys, &dq, &swap, JRelation::JTwisted),
            Err(Error::InvarianceViolation { .. })
        ));
    }

    #[test]
    fn capped_small_eigenvalues() {
        let sys = doubled_system(&[1.0f64, 1.0], &[1.0, 40.0]).unwrap();
        let q = build_quotient(&sys).unwrap();
        let spec = induced_generator(&sys, &q, &[1.0, 2.0]).unwrap();
        assert!(spec.capped);
        assert_eq!(spec.eigenvalues[1], LOG_CAP);
        assert!((spec.eigenvalues[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn growing_semigroup_is_not_contractive() {
        let sys = doubled_system(&[1.0f64], &[-0.5]).unwrap();
        let q = build_quotient(&sys).unwrap();
        assert!(matches!(
            induced_generator(&sys, &q, &[0.1, 0.2]),
            Err(Error::NonContractive { .. })
        ));
    }
}
