//! Algebras defined by structure constants and exact element arithmetic.

mod basis_change;
mod builtin;
mod conjugate;
mod element;
mod spec;

pub use basis_change::{basis_change_bicomplex, to_canonical, to_oblique, BasisDirection};
pub use builtin::{builtin, BUILTIN_NAMES};
pub use conjugate::{conjugate, ConjugationKind};
pub use element::{Element, EXP_MAX_TERMS};
pub use spec::{AlgebraSpec, SignedBasisTerm};
