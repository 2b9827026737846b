//! Measure algebras `M(G/H)` and function algebras `L¹(G/H)` on finite
//! homogeneous spaces, with brute-force checks of their structure.
//!
//! Conventions: Haar measure on `G` is counting measure, Haar measure on `H`
//! has total mass 1, and both modular functions are identically 1.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod coset;
pub mod error;
pub mod group;
pub mod io;
pub mod lebesgue;
pub mod measure;
pub mod random;
pub mod subgroup;
pub mod verify;

pub use algebra::{IdentityReport, InvolutionReport, Method, QuotientAlgebra};
pub use coset::{Coset, CosetSpace};
pub use error::{Error, Result};
pub use group::{Element, FiniteGroup};
pub use lebesgue::{QuotientFunction, RhoSystem, TranslationMode};
pub use measure::{MeasureG, MeasureQ, PointMasses, DEFAULT_TOLERANCE};
pub use num_complex::Complex64;
pub use subgroup::Subgroup;
