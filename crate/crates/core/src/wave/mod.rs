//! Plane waves over the oblique bicomplex basis, differential operators with
//! hypercomplex prefactors, and the generalized Fourier transform.

mod csv;
mod fourier;
mod operator;
mod plane_wave;

pub use csv::{samples_csv, spectrum_csv};
pub use fourier::{
    delta_concentration_ratio, gaussian_windowed, generalized_ft, kernel, linspace, parseval_check,
    sample_wave, uniform_spacing, Direction,
};
pub use operator::{
    apply, expectation, modulus, prefactor_table, schroedinger_residual, verification_grid,
    ApplyResult, Axis, OperatorSpec, PrefactorLine, SchroedingerForm,
};
pub use plane_wave::{make_phi_c, make_phi_j, PlaneWave, WaveTag, EVAL_TOL};
