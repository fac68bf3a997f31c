use nalgebra::Matrix2;

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Contravariant,
    Covariant,
}

/// Four-vector with index 0 temporal, metric `diag(1, -1, -1, -1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub components: [f64; 4],
    pub variance: Variance,
}

impl FourVector {
    pub fn contravariant(components: [f64; 4]) -> Self {
        Self {
            components,
            variance: Variance::Contravariant,
        }
    }

    pub fn covariant(components: [f64; 4]) -> Self {
        Self {
            components,
            variance: Variance::Covariant,
        }
    }

    fn flip_spatial(&self, variance: Variance) -> Self {
        let [t, x, y, z] = self.components;
        Self {
            components: [t, -x, -y, -z],
            variance,
        }
    }

    pub fn raised(&self) -> Self {
        match self.variance {
            Variance::Contravariant => *self,
            Variance::Covariant => self.flip_spatial(Variance::Contravariant),
        }
    }

    pub fn lowered(&self) -> Self {
        match self.variance {
            Variance::Covariant => *self,
            Variance::Contravariant => self.flip_spatial(Variance::Covariant),
        }
    }
}

/// `eta^{mu rho} a_mu b_rho`, whatever the variance of the inputs.
pub fn minkowski_dot(a: &FourVector, b: &FourVector) -> f64 {
    let (up, down) = (a.raised(), b.lowered());
    up.components
        .iter()
        .zip(&down.components)
        .map(|(x, y)| x * y)
        .sum()
}

/// Lorentz boost of the `(t, x)` sector with velocity `v`, `c = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostMatrix {
    v: f64,
    matrix: Matrix2<f64>,
}

pub fn boost(v: f64) -> Result<BoostMatrix> {
    if !v.is_finite() || v.abs() >= 1.0 {
        return Err(domain(format!(
            "boost velocity must satisfy |v| < 1, got {v}"
        )));
    }
    let gamma = 1.0 / (1.0 - v * v).sqrt();
    Ok(BoostMatrix {
        v,
        matrix: Matrix2::new(1.0, -v, -v, 1.0) * gamma,
    })
}

impl BoostMatrix {
    pub fn velocity(&self) -> f64 {
        self.v
    }

    pub fn gamma(&self) -> f64 {
        self.matrix[(0, 0)]
    }

    pub fn matrix(&self) -> &Matrix2<f64> {
        &self.matrix
    }

    pub fn determinant(&self) -> f64 {
        self.matrix.determinant()
    }

    /// Matrix product; boosts along one axis compose to another boost.
    pub fn mul(&self, other: &BoostMatrix) -> Matrix2<f64> {
        self.matrix * other.matrix
    }

    /// Acts on the `(t, x)` components of a contravariant vector.
    pub fn apply(&self, a: &FourVector) -> FourVector {
        let up = a.raised();
        let [t, x, y, z] = up.components;
        let tx = self.matrix * nalgebra::Vector2::new(t, x);
        FourVector::contravariant([tx[0], tx[1], y, z])
    }
}

/// Relativistic velocity addition.
pub fn compose_velocities(v1: f64, v2: f64) -> f64 {
    (v1 + v2) / (1.0 + v1 * v2)
}

/// `|E^2 - |p|^2 - m^2|`, zero exactly when the plane wave solves the
/// Klein-Gordon equation.
pub fn kg_dispersion_residual(p: [f64; 3], energy: f64, m: f64) -> f64 {
    let p2: f64 = p.iter().map(|c| c * c).sum();
    (energy * energy - p2 - m * m).abs()
}
