use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{conjugate, AlgebraSpec, ConjugationKind, Element};
use crate::error::{domain, Result};
use crate::linalg;

pub const RANDOM_STARTS: usize = 200;
pub const DEDUP_TOL: f64 = 1e-7;
const NEWTON_TOL: f64 = 1e-12;
const NEWTON_MAX_ITER: usize = 100;

/// Uniform coordinates in [-1, 1].
pub(crate) fn random_element(spec: &Arc<AlgebraSpec>, rng: &mut ChaCha8Rng) -> Element {
    let coeffs = (0..spec.dim())
        .map(|_| rng.random_range(-1.0..=1.0))
        .collect();
    Element::new(Arc::clone(spec), coeffs).expect("finite sample")
}

/// Starting points `0`, `1`, the basis units and `(e_r +- e_s)/2`.
pub(crate) fn structured_starts(spec: &Arc<AlgebraSpec>) -> Vec<Element> {
    let n = spec.dim();
    let mut starts = vec![Element::zero(spec), Element::one(spec)];
    for r in 0..n {
        starts.push(Element::basis(spec, r));
        for s in (r + 1)..n {
            let (er, es) = (Element::basis(spec, r), Element::basis(spec, s));
            starts.push((&er + &es).scale(0.5));
            starts.push((&er - &es).scale(0.5));
        }
    }
    starts
}

fn newton_idempotent(start: Element) -> Option<Element> {
    let n = start.dim();
    let identity = DMatrix::<f64>::identity(n, n);
    let mut e = start;
    for _ in 0..NEWTON_MAX_ITER {
        let residual = &(&e * &e) - &e;
        if residual.max_abs() < NEWTON_TOL {
            return Some(e);
        }
        // d(e^2 - e) = L_e + R_e - I
        let jacobian = e.left_mul_matrix() + e.right_mul_matrix() - &identity;
        let rhs = -DVector::from_column_slice(residual.coeffs());
        let (step, _) = linalg::least_squares(&jacobian, &rhs);
        let next: Vec<f64> = e
            .coeffs()
            .iter()
            .zip(step.iter())
            .map(|(a, d)| a + d)
            .collect();
        if next.iter().any(|c| !c.is_finite() || c.abs() > 1e6) {
            return None;
        }
        e = Element::new(e.algebra().clone(), next).ok()?;
    }
    let residual = &(&e * &e) - &e;
    (residual.max_abs() < NEWTON_TOL).then_some(e)
}

/// Idempotents found by Newton iteration on `e^2 - e` from structured and
/// seeded random starts. The list starts with `0` and `1`; the rest are
/// sorted by coefficients.
pub fn find_idempotents(spec: &Arc<AlgebraSpec>, seed: u64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = structured_starts(spec);
    starts.extend((0..RANDOM_STARTS).map(|_| random_element(spec, &mut rng)));

    let zero = Element::zero(spec);
    let one = Element::one(spec);
    let mut found: Vec<Element> = Vec::new();
    for start in starts {
        let Some(mut e) = newton_idempotent(start) else {
            continue;
        };
        // snap to exact values produced by integer tables
        let snapped: Vec<f64> = e
            .coeffs()
            .iter()
            .map(|&c| {
                let r = (c * 2.0).round() / 2.0;
                if (c - r).abs() < 1e-10 {
                    r + 0.0
                } else {
                    c
                }
            })
            .collect();
        e = Element::new(spec.clone(), snapped).expect("finite");
        if e.approx_eq(&zero, DEDUP_TOL) || e.approx_eq(&one, DEDUP_TOL) {
            continue;
        }
        if !found.iter().any(|f| f.approx_eq(&e, DEDUP_TOL)) {
            found.push(e);
        }
    }
    found.sort_by(|a, b| {
        a.coeffs()
            .iter()
            .zip(b.coeffs())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut out = vec![zero, one];
    out.extend(found);
    out
}

/// Singular-value threshold below which `left_mul_matrix` counts as singular.
pub fn singular_threshold(dim: usize) -> f64 {
    1e-10 * dim as f64
}

pub fn is_left_zero_divisor(q: &Element) -> bool {
    let m = q.left_mul_matrix();
    let sv = m.svd(false, false).singular_values;
    sv.min() <= singular_threshold(q.dim())
}

/// A nonzero `x` with `q x = 0`, or `None` when left multiplication by `q`
/// is invertible.
///
/// When the kernel has several dimensions the result is the projection of the
/// plain conjugate of `q` onto it (falling back to the basis units), scaled so
/// that its largest coefficient is `+1`.
pub fn zero_divisor_partner(q: &Element) -> Result<Option<Element>> {
    if q.is_zero(0.0) {
        return Err(domain("zero has no zero-divisor partner"));
    }
    let kernel = linalg::kernel(&q.left_mul_matrix(), singular_threshold(q.dim()));
    if kernel.is_empty() {
        return Ok(None);
    }
    let mut candidates = vec![conjugate(&ConjugationKind::Plain, q)?];
    candidates.extend((0..q.dim()).map(|r| Element::basis(q.algebra(), r)));
    for cand in candidates {
        let v = DVector::from_column_slice(cand.coeffs());
        let projected = kernel
            .iter()
            .fold(DVector::zeros(q.dim()), |acc, k| acc + k * k.dot(&v));
        if projected.norm() > 1e-8 {
            let (pos, max) = projected
                .iter()
                .enumerate()
                .fold((0, 0.0f64), |(p, m), (i, c)| {
                    if c.abs() > m + 1e-12 {
                        (i, c.abs())
                    } else {
                        (p, m)
                    }
                });
            let scale = projected[pos].signum() / max;
            let coeffs = projected
                .iter()
                .map(|c| {
                    let x = c * scale;
                    if x.abs() < 1e-14 {
                        0.0
                    } else {
                        x
                    }
                })
                .collect();
            return Element::new(q.algebra().clone(), coeffs).map(Some);
        }
    }
    unreachable!("basis units span the space, so some projection is nonzero")
}
