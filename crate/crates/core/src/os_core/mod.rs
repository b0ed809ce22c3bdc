//! Reflection-positivity machinery on finite-dimensional discretizations:
//! axiom checks, the quotient K = (K₀/N)~, induced operators and generators,
//! and the maximal positive subspace of a finite involutive space.

mod axioms;
mod examples;
mod induced;
mod json;
pub(crate) mod linalg;
mod phillips;
mod quotient;
pub mod random;
mod system;

pub use axioms::{check_axioms, AxiomReport, AxiomTimeReport, AXIOM_TOL};
pub(crate) use examples::doubled_with;
pub use examples::{doubled_system, swap_phase_system, translation_system, trivial_system};
pub use induced::{induce_operator, induced_generator, GeneratorSpectrum, InducedOperator, JRelation, LOG_CAP};
pub use json::{system_from_json, system_to_json};
pub use phillips::{phillips_max_subspace, PhillipsSelection};
pub use quotient::{build_quotient, quotient_from_gram, QuotientSpace, NULL_TOL};
pub use system::{OsSystem, Semigroup};
