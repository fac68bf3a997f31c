//! Minkowski kinematics and biquaternion Dirac coefficients.

mod dirac;
mod minkowski;

pub use dirac::{
    check_clifford, gamma_set, spin_eigen_check, CliffordFailure, CliffordReport,
    MatrixOverAlgebra, PairCheck, SpinEigen, ETA,
};
pub use minkowski::{
    boost, compose_velocities, kg_dispersion_residual, minkowski_dot, BoostMatrix, FourVector,
    Variance,
};
