//! Sign-flip involutions: plain, inner (`*`), outer (bar) and their
//! combination dagger.

use super::basis_change::{to_canonical, to_oblique};
use super::builtin::builtin;
use super::element::Element;
use crate::error::{domain, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugationKind {
    /// Negates every non-real canonical unit.
    Plain,
    /// Negates the inner unit `i0` and the products containing it.
    Inner,
    /// Negates the outer units `i_r` and the products containing them.
    Outer,
    /// Inner and outer together.
    Dagger,
    /// Explicit sign per basis coordinate of the element's own algebra.
    Custom(Vec<i8>),
}

impl ConjugationKind {
    pub fn custom(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(domain("custom conjugation signs must be +1 or -1"));
        }
        Ok(Self::Custom(signs))
    }
}

fn is_builtin(q: &Element, name: &str) -> bool {
    builtin(name).map(|b| **q.algebra() == *b).unwrap_or(false)
}

/// Sign vector in canonical coordinates for the biquaternion/bicomplex cases.
fn canonical_signs(kind: &ConjugationKind, algebra: &str) -> Option<Vec<f64>> {
    use ConjugationKind::*;
    let signs: &[f64] = match (algebra, kind) {
        // (1, i0, i1, i2, i3, sigma1, sigma2, sigma3)
        ("biquaternion", Inner) => &[1., -1., 1., 1., 1., -1., -1., -1.],
        ("biquaternion", Outer) => &[1., 1., -1., -1., -1., -1., -1., -1.],
        ("biquaternion", Dagger) => &[1., -1., -1., -1., -1., 1., 1., 1.],
        // (1, i0, i1, sigma)
        ("bicomplex_canonical", Inner) => &[1., -1., 1., -1.],
        ("bicomplex_canonical", Outer) => &[1., 1., -1., -1.],
        ("bicomplex_canonical", Dagger) => &[1., -1., -1., 1.],
        _ => return None,
    };
    Some(signs.to_vec())
}

fn flip(q: &Element, signs: &[f64]) -> Result<Element> {
    let coeffs = q.coeffs().iter().zip(signs).map(|(c, s)| c * s).collect();
    Element::new(q.algebra().clone(), coeffs)
}

pub fn conjugate(kind: &ConjugationKind, q: &Element) -> Result<Element> {
    if let ConjugationKind::Custom(signs) = kind {
        if signs.len() != q.dim() {
            return Err(domain(format!(
                "{} custom signs for a {}-dimensional algebra",
                signs.len(),
                q.dim()
            )));
        }
        let signs: Vec<f64> = signs.iter().map(|&s| f64::from(s)).collect();
        return flip(q, &signs);
    }
    if is_builtin(q, "bicomplex_oblique") {
        let canonical = to_canonical(q)?;
        return to_oblique(&conjugate(kind, &canonical)?);
    }
    if *kind == ConjugationKind::Plain {
        let mut signs = vec![-1.0; q.dim()];
        signs[0] = 1.0;
        return flip(q, &signs);
    }
    for name in ["biquaternion", "bicomplex_canonical"] {
        if is_builtin(q, name) {
            let signs = canonical_signs(kind, name).expect("all kinds covered");
            return flip(q, &signs);
        }
    }
    Err(domain(format!(
        "{kind:?} conjugation is not defined on `{}`",
        q.algebra().name()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConjugationKind::*;

    fn obl(text: &str) -> Element {
        Element::parse(&builtin("bicomplex_oblique").unwrap(), text).unwrap()
    }

    #[test]
    fn dagger_in_the_oblique_basis() {
        assert_eq!(conjugate(&Dagger, &obl("j")).unwrap(), obl("-j"));
        assert_eq!(conjugate(&Dagger, &obl("k")).unwrap(), obl("k"));
        assert_eq!(conjugate(&Dagger, &obl("i")).unwrap(), obl("-i"));
        assert_eq!(conjugate(&Dagger, &obl("1")).unwrap(), obl("1"));
    }

    #[test]
    fn outer_maps_ideal_to_its_mirror() {
        assert_eq!(conjugate(&Outer, &obl("k")).unwrap(), obl("1 - k"));
        assert_eq!(conjugate(&Outer, &obl("j")).unwrap(), obl("i - j"));
        assert_eq!(conjugate(&Inner, &obl("k")).unwrap(), obl("1 - k"));
    }

    #[test]
    fn quaternion_plain_and_unsupported_kinds() {
        let q = Element::parse(&builtin("quaternion").unwrap(), "1 + 2i1 - 3i2 + 4i3").unwrap();
        assert_eq!(
            conjugate(&Plain, &q).unwrap().coeffs(),
            &[1.0, -2.0, 3.0, -4.0]
        );
        assert!(conjugate(&Dagger, &q).is_err());
        assert!(conjugate(&Inner, &q).is_err());
    }

    #[test]
    fn biquaternion_dagger_fixes_sigmas() {
        let b = builtin("biquaternion").unwrap();
        for label in ["sigma1", "sigma2", "sigma3"] {
            let s = Element::parse(&b, label).unwrap();
            assert_eq!(conjugate(&Dagger, &s).unwrap(), s);
            assert_eq!(conjugate(&Inner, &s).unwrap(), -&s);
            assert_eq!(conjugate(&Outer, &s).unwrap(), -&s);
        }
    }

    #[test]
    fn custom_signs() {
        let q = Element::parse(&builtin("complex").unwrap(), "1 + i").unwrap();
        let kind = ConjugationKind::custom(vec![1, -1]).unwrap();
        assert_eq!(conjugate(&kind, &q).unwrap().coeffs(), &[1.0, -1.0]);
        assert!(ConjugationKind::custom(vec![1, 0]).is_err());
        let wrong_len = ConjugationKind::custom(vec![1]).unwrap();
        assert!(conjugate(&wrong_len, &q).is_err());
    }
}
