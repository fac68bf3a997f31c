//! Structural analysis: property classification, idempotents, ideals,
//! zero divisors, complex-isomorphic planes and oscillation generators.

mod classify;
mod idempotent;
mod oscillation;
mod subspace;

pub use classify::{classify, PropertyReport, Verdict, Witness, SAMPLES};
pub use idempotent::{
    find_idempotents, is_left_zero_divisor, singular_threshold, zero_divisor_partner, DEDUP_TOL,
    RANDOM_STARTS,
};
pub use oscillation::{analyze_oscillation_generator, check_ft_conditions, OscillationAnalysis};
pub use subspace::{
    classify_2d_generator, classify_generator_with_unit, find_complex_subalgebras_bicomplex,
    internal_identity, is_ideal, PlaneKind, SubalgebraDescriptor,
};
