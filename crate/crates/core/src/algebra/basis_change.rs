//! Coordinate change between the canonical bicomplex basis `(1, i0, i1, sigma)`
//! and the oblique basis `(1, i, j, k)` with
//! `i = i0`, `j = (i0 - i1)/2`, `k = (1 + sigma)/2`.

use super::builtin::builtin;
use super::element::Element;
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisDirection {
    CanonicalToOblique,
    ObliqueToCanonical,
}

pub fn basis_change_bicomplex(q: &Element, direction: BasisDirection) -> Result<Element> {
    let (from, to) = match direction {
        BasisDirection::CanonicalToOblique => ("bicomplex_canonical", "bicomplex_oblique"),
        BasisDirection::ObliqueToCanonical => ("bicomplex_oblique", "bicomplex_canonical"),
    };
    let source = builtin(from)?;
    if **q.algebra() != *source {
        return Err(domain(format!(
            "expected an element of `{from}`, got `{}`",
            q.algebra().name()
        )));
    }
    let c = q.coeffs();
    let coeffs = match direction {
        BasisDirection::CanonicalToOblique => {
            let (w, x, y, z) = (c[0], c[1], c[2], c[3]);
            vec![w - z, x + y, -2.0 * y, 2.0 * z]
        }
        BasisDirection::ObliqueToCanonical => {
            let (a, b, cj, d) = (c[0], c[1], c[2], c[3]);
            vec![a + 0.5 * d, b + 0.5 * cj, -0.5 * cj, 0.5 * d]
        }
    };
    Element::new(builtin(to)?, coeffs)
}

pub fn to_oblique(q: &Element) -> Result<Element> {
    basis_change_bicomplex(q, BasisDirection::CanonicalToOblique)
}

pub fn to_canonical(q: &Element) -> Result<Element> {
    basis_change_bicomplex(q, BasisDirection::ObliqueToCanonical)
}
