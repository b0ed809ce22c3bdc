//! The SL(2,ℝ) complementary series π_s, 0 < s < 1: the action on
//! (−1,1)-supported functions, the reflection J, the J-form with kernel
//! (1−xy)^{s−1}, the reproducing-kernel space H(s), the intertwiner U onto
//! holomorphic functions, the δ-derivative basis and the dilation spectrum.

mod delta;
mod form;
mod grid;
mod holomorphic;

pub use delta::{delta_system, dilation_spectrum, moment_ratio_samples, DistributionVector};
pub use form::{delta_gram, delta_norm_sq, j_form, j_kernel_matrix, line_form};
pub use grid::{j_apply, j_involution, pi_s_action, GridFunction, LineFunction, SL2};
pub use holomorphic::{intertwiner_u, kernel_vector, rho_s_action, rkhs_inner, HolomorphicVector};

use crate::{Error, Result};

/// Parameter s of the complementary series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementaryKernel {
    s: f64,
}

impl ComplementaryKernel {
    pub fn new(s: f64) -> Result<Self> {
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::InvalidInput(format!("s must lie in (0, 1), got {s}")));
        }
        Ok(Self { s })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// |x − y|^{s−1}; infinite on the diagonal.
    pub fn line_kernel(&self, x: f64, y: f64) -> f64 {
        (x - y).abs().powf(self.s - 1.0)
    }

    /// (1 − xy)^{s−1} on (−1,1)².
    pub fn interval_kernel(&self, x: f64, y: f64) -> f64 {
        (1.0 - x * y).powf(self.s - 1.0)
    }

    /// (1 − w z̄)^{s−1} on the disc, principal branch.
    pub fn disc_kernel(&self, w: crate::C64, z: crate::C64) -> crate::C64 {
        (crate::C64::new(1.0, 0.0) - w * z.conj()).powf(self.s - 1.0)
    }
}

pub(crate) fn check_s(s: f64) -> Result<()> {
    ComplementaryKernel::new(s).map(|_| ())
}

/// binom(s−1, n) for n = 0..=n_max.
pub(crate) fn binom_sm1(s: f64, n_max: usize) -> Vec<f64> {
    crate::numerics::binomial_series(s - 1.0, n_max)
}
