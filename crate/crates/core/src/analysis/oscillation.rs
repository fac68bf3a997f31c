use crate::algebra::Element;
use crate::error::{Error, Result};

pub const FT_TOL: f64 = 1e-12;

/// `beta^2 = -lambda^2 * idempotent`, so `alpha exp(beta x)` oscillates with
/// angular frequency `lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillationAnalysis {
    pub generator: Element,
    pub idempotent: Element,
    pub lambda: f64,
}

/// Kernel admissibility for the generalized Fourier transform:
/// `alpha^2 = alpha`, `beta^2 = -alpha`, `alpha beta = beta alpha = beta`.
pub fn check_ft_conditions(alpha: &Element, beta: &Element) -> bool {
    if !alpha.same_algebra(beta) {
        return false;
    }
    let a2 = alpha * alpha;
    let b2 = beta * beta;
    a2.approx_eq(alpha, FT_TOL)
        && b2.approx_eq(&(-alpha), FT_TOL)
        && (alpha * beta).approx_eq(beta, FT_TOL)
        && (beta * alpha).approx_eq(beta, FT_TOL)
}

pub fn analyze_oscillation_generator(beta: &Element) -> Result<OscillationAnalysis> {
    let v = -(beta * beta);
    let norm = v.coeff_norm();
    if norm <= 1e-12 {
        return Err(Error::Analysis(format!("`{beta}` squares to zero")));
    }
    // idempotent scaling requires v^2 = c v with c = lambda^2 > 0
    let v2 = &v * &v;
    let c = v2
        .coeffs()
        .iter()
        .zip(v.coeffs())
        .map(|(a, b)| a * b)
        .sum::<f64>()
        / (norm * norm);
    if (&v2 - &v.scale(c)).max_abs() > 1e-9 * (1.0 + v2.max_abs()) {
        return Err(Error::Analysis(format!(
            "`{beta}` squares to `{}`, which is not a multiple of an idempotent",
            -&v
        )));
    }
    if c <= 1e-12 {
        return Err(Error::Analysis(format!(
            "`{beta}` squares to a positive multiple of an idempotent"
        )));
    }
    let idempotent = v.scale(1.0 / c);
    let lambda = c.sqrt();
    let check = &(beta * beta) + &idempotent.scale(c);
    if check.max_abs() > 1e-9 || !(&idempotent * &idempotent).approx_eq(&idempotent, 1e-9) {
        return Err(Error::Analysis(format!("verification failed for `{beta}`")));
    }
    Ok(OscillationAnalysis {
        generator: beta.clone(),
        idempotent,
        lambda,
    })
}
