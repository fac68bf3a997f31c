use std::fmt;
use std::sync::Arc;

use nalgebra::DVector;

use crate::algebra::{builtin, AlgebraSpec, Element};
use crate::error::{domain, Result};
use crate::linalg;

const SPAN_TOL: f64 = 1e-9;

/// Which two-dimensional algebra a plane `span{u, g}` is isomorphic to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneKind {
    /// Normalized generator squares to the unit negated.
    Complex,
    /// Normalized generator squares to zero.
    Dual,
    /// Normalized generator squares to the unit.
    Split,
}

impl fmt::Display for PlaneKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlaneKind::Complex => "complex_iso",
            PlaneKind::Dual => "dual_iso",
            PlaneKind::Split => "split_iso",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SubalgebraDescriptor {
    pub name: &'static str,
    pub basis: Vec<Element>,
    pub kind: PlaneKind,
    pub is_ideal: bool,
    pub internal_identity: Option<Element>,
}

fn coords_matrix(vectors: &[Element]) -> nalgebra::DMatrix<f64> {
    let cols: Vec<&[f64]> = vectors.iter().map(Element::coeffs).collect();
    linalg::columns(&cols)
}

fn in_span(basis_rank: usize, basis: &[Element], v: &Element) -> bool {
    let mut all = basis.to_vec();
    all.push(v.clone());
    linalg::rank(&coords_matrix(&all), SPAN_TOL) == basis_rank
}

fn check_independent(spec: &Arc<AlgebraSpec>, basis: &[Element]) -> Result<usize> {
    if basis.is_empty() {
        return Err(domain("empty subspace basis"));
    }
    if let Some(b) = basis.iter().find(|b| **b.algebra() != **spec) {
        return Err(domain(format!(
            "`{b}` is not an element of `{}`",
            spec.name()
        )));
    }
    let r = linalg::rank(&coords_matrix(basis), SPAN_TOL);
    if r != basis.len() {
        return Err(domain("subspace basis is linearly dependent"));
    }
    Ok(r)
}

/// True iff `gamma * beta` and `beta * gamma` stay in the span for every
/// algebra basis unit `gamma` and subspace basis element `beta`.
pub fn is_ideal(spec: &Arc<AlgebraSpec>, subspace_basis: &[Element]) -> Result<bool> {
    let r = check_independent(spec, subspace_basis)?;
    for g in 0..spec.dim() {
        let gamma = Element::basis(spec, g);
        for beta in subspace_basis {
            if !in_span(r, subspace_basis, &(&gamma * beta))
                || !in_span(r, subspace_basis, &(beta * &gamma))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Element `u` of `span(basis)` acting as a two-sided identity on the span.
pub fn internal_identity(basis: &[Element]) -> Option<Element> {
    let first = basis.first()?;
    let n = first.dim();
    let m = basis.len();
    // unknowns c_1..c_m in u = sum c_a b_a; equations u b = b and b u = b
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for b in basis {
        for left in [true, false] {
            let cols: Vec<Element> = basis
                .iter()
                .map(|ba| if left { ba * b } else { b * ba })
                .collect();
            for coord in 0..n {
                rows.push(cols.iter().map(|c| c.coeffs()[coord]).collect::<Vec<_>>());
                rhs.push(b.coeffs()[coord]);
            }
        }
    }
    let a = nalgebra::DMatrix::from_fn(rows.len(), m, |r, c| rows[r][c]);
    let (x, residual) = linalg::least_squares(&a, &DVector::from_vec(rhs));
    if residual > 1e-9 {
        return None;
    }
    let u = basis
        .iter()
        .zip(x.iter())
        .fold(Element::zero(first.algebra()), |acc, (b, c)| {
            acc + b.scale(*c)
        });
    Some(u)
}

/// Classifies the plane `span{unit, g}` from `g^2 = a*unit + b*g`, returning
/// the kind and `(g - b/2 unit) / (sqrt|a + b^2/4| + [4a = -b^2])`.
pub fn classify_generator_with_unit(unit: &Element, g: &Element) -> Result<(PlaneKind, Element)> {
    if !unit.same_algebra(g) {
        return Err(domain("unit and generator live in different algebras"));
    }
    let plane = linalg::columns(&[unit.coeffs(), g.coeffs()]);
    if linalg::rank(&plane, SPAN_TOL) < 2 {
        return Err(domain(format!(
            "generator `{g}` is proportional to the unit"
        )));
    }
    let sq = g * g;
    let (ab, residual) = linalg::least_squares(&plane, &DVector::from_column_slice(sq.coeffs()));
    if residual > SPAN_TOL * (1.0 + sq.coeff_norm()) {
        return Err(domain(format!(
            "span{{{unit}, {g}}} is not closed under multiplication"
        )));
    }
    let (a, b) = (ab[0], ab[1]);
    let disc = a + b * b / 4.0;
    let scale_tol = 1e-12 * (1.0 + a.abs() + b * b);
    let kind = if disc.abs() <= scale_tol {
        PlaneKind::Dual
    } else if disc > 0.0 {
        PlaneKind::Split
    } else {
        PlaneKind::Complex
    };
    let denom = if kind == PlaneKind::Dual {
        1.0
    } else {
        disc.abs().sqrt()
    };
    let normalized = (g - &unit.scale(b / 2.0)).scale(1.0 / denom);
    Ok((kind, normalized))
}

/// Two-dimensional classification of `span{1, g}`.
pub fn classify_2d_generator(spec: &Arc<AlgebraSpec>, g: &Element) -> Result<(PlaneKind, Element)> {
    if **g.algebra() != **spec {
        return Err(domain("generator is not an element of the given algebra"));
    }
    classify_generator_with_unit(&Element::one(spec), g)
}

/// The four complex-isomorphic planes of the bicomplex numbers, in the
/// oblique basis: `C1 = span{1, i}`, `C0 = span{1, i - 2j}`,
/// `J = span{k, j}` and `Jbar = span{1 - k, i - j}`.
pub fn find_complex_subalgebras_bicomplex() -> Vec<SubalgebraDescriptor> {
    let spec = builtin("bicomplex_oblique").expect("builtin");
    let el = |t: &str| Element::parse(&spec, t).expect("valid literal");
    let planes: [(&'static str, [&str; 2]); 4] = [
        ("C1", ["1", "i"]),
        ("C0", ["1", "i - 2j"]),
        ("J", ["k", "j"]),
        ("Jbar", ["1 - k", "i - j"]),
    ];
    planes
        .into_iter()
        .map(|(name, [a, b])| {
            let basis = vec![el(a), el(b)];
            let unit = internal_identity(&basis).expect("each plane has a unit");
            let (kind, _) =
                classify_generator_with_unit(&unit, &basis[1]).expect("plane is closed");
            let ideal = is_ideal(&spec, &basis).expect("independent basis");
            SubalgebraDescriptor {
                name,
                basis,
                kind,
                is_ideal: ideal,
                internal_identity: Some(unit),
            }
        })
        .collect()
}
