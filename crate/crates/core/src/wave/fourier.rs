//! Finite-domain generalized Fourier transform with kernel
//! `alpha exp(-s beta p x)`, symmetric `1/sqrt(2 pi)` normalization.

use std::f64::consts::TAU;

use super::plane_wave::{PlaneWave, WaveTag};
use crate::algebra::{builtin, Element};
use crate::analysis::check_ft_conditions;
use crate::error::{domain, Result};

/// Relative tolerance on grid spacing uniformity.
const UNIFORM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Admissible `(alpha, beta)` pair of the complex plane or the ideal.
pub fn kernel(tag: WaveTag) -> (Element, Element) {
    let spec = builtin("bicomplex_oblique").expect("builtin");
    let el = |t: &str| Element::parse(&spec, t).expect("valid literal");
    match tag {
        WaveTag::C => (el("1"), el("i")),
        WaveTag::J => (el("k"), el("j")),
    }
}

/// Spacing of a uniform grid with at least two points.
pub fn uniform_spacing(grid: &[f64]) -> Result<f64> {
    if grid.len() < 2 {
        return Err(domain(format!(
            "grid needs at least 2 points, got {}",
            grid.len()
        )));
    }
    let h = grid[1] - grid[0];
    if !h.is_finite() || h <= 0.0 {
        return Err(domain("grid must be strictly increasing"));
    }
    for w in grid.windows(2) {
        if ((w[1] - w[0]) - h).abs() > UNIFORM_TOL * h.max(w[1].abs()) {
            return Err(domain("grid is not uniform"));
        }
    }
    Ok(h)
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let h = (b - a) / (n - 1) as f64;
            (0..n).map(|i| a + h * i as f64).collect()
        }
    }
}

/// `G(p') = h/sqrt(2 pi) * sum_x w_x F(x) alpha exp(-s beta p' x)` with
/// trapezoidal weights `w_x` and `s = +1` forward, `-1` inverse.
pub fn generalized_ft(
    samples: &[(f64, Element)],
    alpha: &Element,
    beta: &Element,
    p_grid: &[f64],
    direction: Direction,
) -> Result<Vec<(f64, Element)>> {
    if !check_ft_conditions(alpha, beta) {
        return Err(domain(format!(
            "kernel ({alpha}, {beta}) is not admissible: need alpha^2 = alpha, beta^2 = -alpha, alpha beta = beta alpha = beta"
        )));
    }
    let xs: Vec<f64> = samples.iter().map(|(x, _)| *x).collect();
    let h = uniform_spacing(&xs)?;
    if let Some((_, f)) = samples.iter().find(|(_, f)| !f.same_algebra(alpha)) {
        return Err(domain(format!(
            "sample `{f}` is not in the kernel's algebra"
        )));
    }
    let s = match direction {
        Direction::Forward => 1.0,
        Direction::Inverse => -1.0,
    };
    let norm = h / TAU.sqrt();
    let last = samples.len() - 1;
    // F alpha exp(beta phi) = F (alpha cos phi + beta sin phi) since alpha beta = beta
    let fa: Vec<Element> = samples.iter().map(|(_, f)| f * alpha).collect();
    let fb: Vec<Element> = samples.iter().map(|(_, f)| f * beta).collect();
    let dim = alpha.dim();
    let out = p_grid
        .iter()
        .map(|&p| {
            let mut acc = vec![0.0; dim];
            for (idx, &x) in xs.iter().enumerate() {
                let weight = if idx == 0 || idx == last { 0.5 } else { 1.0 };
                let (sin, cos) = (-s * p * x).sin_cos();
                for (c, (a, b)) in acc
                    .iter_mut()
                    .zip(fa[idx].coeffs().iter().zip(fb[idx].coeffs()))
                {
                    *c += weight * (a * cos + b * sin);
                }
            }
            let g = Element::new(
                alpha.algebra().clone(),
                acc.into_iter().map(|c| c * norm).collect(),
            )
            .expect("dimension matches");
            (p, g)
        })
        .collect();
    Ok(out)
}

/// Samples of `w` at `t = 0` on `n` points spanning `[-l/2, l/2]`.
pub fn sample_wave(w: &PlaneWave, l: f64, n: usize) -> Result<Vec<(f64, Element)>> {
    linspace(-l / 2.0, l / 2.0, n)
        .into_iter()
        .map(|x| Ok((x, w.eval(x, 0.0)?)))
        .collect()
}

/// Samples of `w` at `t = 0` multiplied by `exp(-x^2 / (2 sigma^2))`.
pub fn gaussian_windowed(
    w: &PlaneWave,
    sigma: f64,
    l: f64,
    n: usize,
) -> Result<Vec<(f64, Element)>> {
    Ok(sample_wave(w, l, n)?
        .into_iter()
        .map(|(x, v)| (x, v.scale((-x * x / (2.0 * sigma * sigma)).exp())))
        .collect())
}

/// Growth of `|G(p)|` when the domain `[-l/2, l/2]` doubles at fixed spacing.
/// Near 2 when the transform concentrates into a delta at `p`, near 1 when it
/// stays bounded.
pub fn delta_concentration_ratio(
    wave: WaveTag,
    kernel_tag: WaveTag,
    p: f64,
    l: f64,
    n: usize,
) -> Result<f64> {
    if !l.is_finite() || l <= 0.0 {
        return Err(domain(format!("domain length must be positive, got {l}")));
    }
    if n < 2 {
        return Err(domain(format!("grid needs at least 2 points, got {n}")));
    }
    let w = PlaneWave::from_tag(wave, p, 0.0);
    let (alpha, beta) = kernel(kernel_tag);
    let norm_at = |l: f64, n: usize| -> Result<f64> {
        let g = generalized_ft(
            &sample_wave(&w, l, n)?,
            &alpha,
            &beta,
            &[p],
            Direction::Forward,
        )?;
        Ok(g[0].1.coeff_norm())
    };
    let base = norm_at(l, n)?;
    if base == 0.0 {
        return Err(domain("transform vanishes on the base domain"));
    }
    Ok(norm_at(2.0 * l, 2 * n - 1)? / base)
}

/// `(sum |phi(x)|^2 dx, sum |phi(p)|^2 dp)` with Euclidean coefficient norms.
pub fn parseval_check(
    samples_x: &[(f64, Element)],
    samples_p: &[(f64, Element)],
) -> Result<(f64, f64)> {
    let side = |samples: &[(f64, Element)]| -> Result<f64> {
        let grid: Vec<f64> = samples.iter().map(|(x, _)| *x).collect();
        let h = uniform_spacing(&grid)?;
        Ok(h * samples
            .iter()
            .map(|(_, v)| v.coeff_norm().powi(2))
            .sum::<f64>())
    };
    Ok((side(samples_x)?, side(samples_p)?))
}
