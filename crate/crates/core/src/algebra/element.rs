use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use nalgebra::DMatrix;

use super::spec::AlgebraSpec;
use crate::error::{domain, Error, Result};

/// Hard cap on the number of series terms in [`Element::exp`].
pub const EXP_MAX_TERMS: usize = 200;

/// A coefficient vector over an [`AlgebraSpec`].
///
/// The arithmetic operators panic when the operands live in different
/// algebras; the `checked_*` methods return a domain error instead.
#[derive(Debug, Clone)]
pub struct Element {
    algebra: Arc<AlgebraSpec>,
    coeffs: Vec<f64>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.coeffs == other.coeffs
    }
}

impl Element {
    pub fn new(algebra: Arc<AlgebraSpec>, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(domain(format!(
                "{} coefficients for a {}-dimensional algebra",
                coeffs.len(),
                algebra.dim()
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(domain(format!("non-finite coefficient {c}")));
        }
        Ok(Self { algebra, coeffs })
    }

    pub fn zero(algebra: &Arc<AlgebraSpec>) -> Self {
        Self {
            coeffs: vec![0.0; algebra.dim()],
            algebra: Arc::clone(algebra),
        }
    }

    pub fn scalar(algebra: &Arc<AlgebraSpec>, value: f64) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[0] = value;
        e
    }

    pub fn one(algebra: &Arc<AlgebraSpec>) -> Self {
        Self::scalar(algebra, 1.0)
    }

    /// The basis unit `e_index`.
    pub fn basis(algebra: &Arc<AlgebraSpec>, index: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.coeffs[index] = 1.0;
        e
    }

    /// Parses a real linear combination of basis labels such as
    /// `0.5 + 0.5*sigma`, `i - 2j` or `-k`.
    pub fn parse(algebra: &Arc<AlgebraSpec>, text: &str) -> Result<Self> {
        let mut out = Self::zero(algebra);
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(domain("empty element expression"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (pos, ch) in text.char_indices() {
            if (ch == '+' || ch == '-') && pos > start {
                terms.push(&text[start..pos]);
                start = pos;
            }
        }
        terms.push(&text[start..]);
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-1.0, &term[1..]),
                b'+' => (1.0, &term[1..]),
                _ => (1.0, term),
            };
            let split = body
                .find(|c: char| !(c.is_ascii_digit() || c == '.'))
                .unwrap_or(body.len());
            let (num, rest) = body.split_at(split);
            let coeff = if num.is_empty() {
                1.0
            } else {
                num.parse::<f64>()
                    .map_err(|_| domain(format!("bad coefficient in `{term}`")))?
            };
            let label = rest.strip_prefix('*').unwrap_or(rest);
            let index = if label.is_empty() {
                if num.is_empty() {
                    return Err(domain(format!("empty term in `{text}`")));
                }
                0
            } else {
                algebra
                    .index_of(label)
                    .ok_or_else(|| domain(format!("unknown basis label `{label}`")))?
            };
            out.coeffs[index] += sign * coeff;
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(domain(format!(
                "operands live in different algebras (`{}` and `{}`)",
                self.algebra.name(),
                other.algebra.name()
            )))
        }
    }

    fn with_coeffs(&self, coeffs: Vec<f64>) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            coeffs,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coeffs(self.algebra.mul_coords(&self.coeffs, &other.coeffs)))
    }

    pub fn scale(&self, factor: f64) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `q^n` as the left-nested product `((q q) q) ... q`; `q^0 = 1`.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.algebra);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Power series `sum q^n / n!`, stopped once the newest term's largest
    /// coefficient drops below `tol * (1 + max|partial sum|)`.
    pub fn exp(&self, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(domain("exp tolerance must be positive"));
        }
        if !self.algebra.is_associative() {
            return Err(domain(format!(
                "exp requires an associative algebra; `{}` is not",
                self.algebra.name()
            )));
        }
        let mut sum = Self::one(&self.algebra);
        let mut term = Self::one(&self.algebra);
        for n in 1..EXP_MAX_TERMS {
            term = (&term * self).scale(1.0 / n as f64);
            sum = &sum + &term;
            if term.max_abs() < tol * (1.0 + sum.max_abs()) {
                return Ok(sum);
            }
        }
        Err(Error::Convergence {
            terms: EXP_MAX_TERMS,
        })
    }

    /// Exponential for arguments of any size: the argument is halved until its
    /// coefficients are at most 1/2, the series is summed, and the result is
    /// squared back up.
    pub fn exp_scaled(&self, tol: f64) -> Result<Self> {
        let mut halvings = 0u32;
        let mut max = self.max_abs();
        while max > 0.5 && halvings < 1000 {
            max *= 0.5;
            halvings += 1;
        }
        let mut out = self.scale(0.5f64.powi(halvings as i32)).exp(tol)?;
        for _ in 0..halvings {
            out = &out * &out;
        }
        Ok(out)
    }

    /// Matrix of `x -> self * x` in the basis coordinates.
    pub fn left_mul_matrix(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |row, col| {
            let unit = Self::basis(&self.algebra, col);
            (self * &unit).coeffs[row]
        })
    }

    /// Matrix of `x -> x * self` in the basis coordinates.
    pub fn right_mul_matrix(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |row, col| {
            let unit = Self::basis(&self.algebra, col);
            (&unit * self).coeffs[row]
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Largest coefficient-wise difference; infinite across algebras.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if !self.same_algebra(other) {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs[1..].iter().all(|c| c.abs() <= tol)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let label = self.algebra.label(i);
            let mag = c.abs();
            if wrote {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            match (i, mag == 1.0) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => f.write_str(label)?,
                (_, false) => write!(f, "{mag}*{label}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Element> for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Element> for Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                (&self).$method(rhs)
            }
        }
        impl $trait<Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Mul<f64> for &Element {
    type Output = Element;
    fn mul(self, rhs: f64) -> Element {
        self.scale(rhs)
    }
}

impl Mul<f64> for Element {
    type Output = Element;
    fn mul(self, rhs: f64) -> Element {
        self.scale(rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-1.0)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;
    use std::f64::consts::PI;

    fn el(alg: &str, text: &str) -> Element {
        Element::parse(&builtin(alg).unwrap(), text).unwrap()
    }

    #[test]
    fn parse_linear_combinations() {
        let b = builtin("bicomplex_oblique").unwrap();
        assert_eq!(
            Element::parse(&b, "i - 2j").unwrap().coeffs(),
            &[0.0, 1.0, -2.0, 0.0]
        );
        assert_eq!(
            Element::parse(&b, "1-k").unwrap().coeffs(),
            &[1.0, 0.0, 0.0, -1.0]
        );
        assert_eq!(
            Element::parse(&b, "0.5*k").unwrap().coeffs(),
            &[0.0, 0.0, 0.0, 0.5]
        );
        assert!(Element::parse(&b, "q").is_err());
        let q = builtin("quaternion").unwrap();
        assert_eq!(
            Element::parse(&q, "2i3").unwrap().coeffs(),
            &[0.0, 0.0, 0.0, 2.0]
        );
    }

    #[test]
    fn zero_divisors_in_oblique_basis() {
        let k = el("bicomplex_oblique", "k");
        let kbar = el("bicomplex_oblique", "1 - k");
        assert!((&k * &kbar).is_zero(0.0));
    }

    #[test]
    fn canonical_unit_product() {
        assert_eq!(
            el("bicomplex_canonical", "i0") * el("bicomplex_canonical", "i1"),
            el("bicomplex_canonical", "sigma")
        );
    }

    #[test]
    fn mismatched_algebras_are_a_domain_error() {
        let a = el("complex", "i");
        let b = el("dual", "Omega");
        assert!(matches!(a.checked_mul(&b), Err(Error::Domain(_))));
        assert!(matches!(a.checked_add(&b), Err(Error::Domain(_))));
        assert!(matches!(a.checked_sub(&b), Err(Error::Domain(_))));
    }

    #[test]
    fn new_checks_length_and_finiteness() {
        let c = builtin("complex").unwrap();
        assert!(Element::new(c.clone(), vec![1.0]).is_err());
        assert!(Element::new(c.clone(), vec![1.0, f64::NAN]).is_err());
        assert!(Element::new(c, vec![1.0, 2.0]).is_ok());
    }

    #[test]
    fn plumbing_ops() {
        let x = el("quaternion", "1 + 2i1 - i3");
        let zero = Element::zero(x.algebra());
        assert_eq!(&x + &zero, x);
        assert_eq!(
            Element::one(x.algebra()).scale(2.0).coeffs(),
            &[2.0, 0.0, 0.0, 0.0]
        );
        assert!((&x - &x).is_zero(0.0));
    }

    #[test]
    fn powers() {
        let k = el("bicomplex_oblique", "k");
        assert_eq!(k.pow(5), k);
        assert_eq!(
            el("bicomplex_oblique", "j").pow(2),
            el("bicomplex_oblique", "-k")
        );
        assert_eq!(k.pow(0), Element::one(k.algebra()));
    }

    #[test]
    fn euler_identity() {
        let z = el("complex", "i").scale(PI).exp(1e-15).unwrap();
        assert!(z.approx_eq(&el("complex", "-1"), 1e-12));
        let zero = Element::zero(&builtin("complex").unwrap());
        assert_eq!(zero.exp(1e-12).unwrap(), Element::one(zero.algebra()));
    }

    #[test]
    fn exp_of_j_pi_inside_the_ideal() {
        let k = el("bicomplex_oblique", "k");
        let got = &k * el("bicomplex_oblique", "j").scale(PI).exp(1e-15).unwrap();
        assert!(got.approx_eq(&(-&k), 1e-12));
    }

    #[test]
    fn exp_cap_signals_bad_scale() {
        let big = el("complex", "i").scale(1000.0);
        assert_eq!(
            big.exp(1e-12),
            Err(Error::Convergence {
                terms: EXP_MAX_TERMS
            })
        );
        // scaling and squaring copes with the same argument
        let z = big.exp_scaled(1e-15).unwrap();
        assert!((z.coeffs()[0] - 1000f64.cos()).abs() < 1e-10);
        assert!((z.coeffs()[1] - 1000f64.sin()).abs() < 1e-10);
    }

    #[test]
    fn left_mul_matrices() {
        let one = Element::one(&builtin("quaternion").unwrap());
        assert_eq!(one.left_mul_matrix(), DMatrix::identity(4, 4));

        let i1 = el("quaternion", "i1");
        let m = i1.left_mul_matrix();
        assert!((m.transpose() * &m - DMatrix::identity(4, 4)).amax() < 1e-15);
        assert!((m.determinant() - 1.0).abs() < 1e-12);

        // columns k*1, k*i, k*j, k*k read off the oblique table
        let k = el("bicomplex_oblique", "k");
        #[rustfmt::skip]
        let expected = DMatrix::from_column_slice(4, 4, &[
            0.0, 0.0, 0.0, 1.0,
            0.0, 0.0, 1.0, 0.0,
            0.0, 0.0, 1.0, 0.0,
            0.0, 0.0, 0.0, 1.0,
        ]);
        assert_eq!(k.left_mul_matrix(), expected);
        assert_eq!(expected.rank(1e-10), 2);
    }

    #[test]
    fn display() {
        assert_eq!(el("bicomplex_oblique", "1 - k").to_string(), "1 - k");
        assert_eq!(el("bicomplex_oblique", "-0.5*j").to_string(), "-0.5*j");
        assert_eq!(Element::zero(&builtin("dual").unwrap()).to_string(), "0");
    }
}
