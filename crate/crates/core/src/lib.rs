//! Hypercomplex algebras defined by structure constants, plus the machinery
//! to check bicomplex plane-wave quantum mechanics and biquaternion Dirac
//! coefficients against them.

pub mod algebra;
pub mod analysis;
pub mod checks;
pub mod error;
pub mod format;
mod linalg;
pub mod relativity;
pub mod report;
pub mod wave;

pub use algebra::{builtin, AlgebraSpec, ConjugationKind, Element};
pub use error::{Error, Result};
