//! Quadrature, Hermitian eigensolves, PSD certification and special functions.

mod hermitian;
mod interp;
mod psd;
mod quadrature;
mod special;

pub use hermitian::{eigendecompose_hermitian, frobenius, HermitianEigen, HermitianMatrix};
pub use interp::Barycentric;
pub use psd::{certify_psd, PsdReport, DEFAULT_PSD_TOL};
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use special::{binomial_series, ln_factorial, log_gamma_ratio, LogPochhammer};

use crate::Real;

/// Default number of Gauss–Legendre nodes per axis, overridable by `OSDUAL_NODES`.
pub fn default_nodes() -> usize {
    std::env::var("OSDUAL_NODES")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(200)
}

pub(crate) fn max<T: Real>(a: T, b: T) -> T {
    if a > b {
        a
    } else {
        b
    }
}
