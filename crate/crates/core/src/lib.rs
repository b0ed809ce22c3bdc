//! Numerical verification of reflection positivity and the duality it
//! induces on unitary representations.
//!
//! The generic core ([`numerics`], [`os_core`], [`path_measure`]) is written
//! over any [`Real`] scalar; the worked examples ([`su11`], [`bargmann`],
//! [`counterexamples`]) are concrete in `f64`, and [`structure_data`] uses
//! exact rationals.

pub mod bargmann;
pub mod counterexamples;
pub mod error;
pub mod numerics;
pub mod os_core;
pub mod path_measure;
pub mod scalar;
pub mod structure_data;
pub mod su11;

pub use error::{Error, Result};
pub use scalar::Real;

pub use num_complex::Complex;

/// Complex scalar in double precision.
pub type C64 = Complex<f64>;
/// Dense complex matrix over a generic scalar.
pub type CMatrix<T> = nalgebra::DMatrix<Complex<T>>;
/// Dense complex matrix in double precision.
pub type CMat = CMatrix<f64>;

pub type QuadratureRule = numerics::QuadratureRule<f64>;
pub type HermitianMatrix = numerics::HermitianMatrix<f64>;
pub type PsdReport = numerics::PsdReport<f64>;
pub type OsSystem = os_core::OsSystem<f64>;
pub type QuotientSpace = os_core::QuotientSpace<f64>;
pub type InducedOperator = os_core::InducedOperator<f64>;
pub type Rational = num_rational::Ratio<i64>;
