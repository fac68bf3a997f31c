use std::f64::consts::TAU;
use std::fmt;

use nalgebra::DVector;

use super::plane_wave::{PlaneWave, WaveTag};
use crate::algebra::{builtin, conjugate, ConjugationKind, Element};
use crate::error::{domain, Error, Result};
use crate::linalg;

const EIGEN_TOL: f64 = 1e-12;
const CONSTANT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    T,
}

/// `sign * prefactor * d^order / d axis^order`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpec {
    prefactor: Element,
    axis: Axis,
    sign: f64,
    order: u32,
}

impl OperatorSpec {
    pub fn new(prefactor: Element, axis: Axis, sign: i8) -> Result<Self> {
        if prefactor.is_zero(0.0) {
            return Err(domain("operator prefactor must be nonzero"));
        }
        if sign != 1 && sign != -1 {
            return Err(domain(format!(
                "operator sign must be +1 or -1, got {sign}"
            )));
        }
        Ok(Self {
            prefactor,
            axis,
            sign: f64::from(sign),
            order: 1,
        })
    }

    /// Operator in the oblique bicomplex basis from a prefactor literal.
    pub fn oblique(prefactor: &str, axis: Axis, sign: i8) -> Result<Self> {
        let spec = builtin("bicomplex_oblique")?;
        Self::new(Element::parse(&spec, prefactor)?, axis, sign)
    }

    pub fn with_order(mut self, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(domain("derivative order must be at least 1"));
        }
        self.order = order;
        Ok(self)
    }

    pub fn prefactor(&self) -> &Element {
        &self.prefactor
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn sign(&self) -> i8 {
        self.sign as i8
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0.0 { '-' } else { '+' };
        let axis = match self.axis {
            Axis::X => 'x',
            Axis::T => 't',
        };
        let order = if self.order == 1 {
            String::new()
        } else {
            format!("^{}", self.order)
        };
        write!(f, "{sign}({})d{axis}{order}", self.prefactor)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApplyResult {
    pub wave: PlaneWave,
    pub eigenvalue: Option<Element>,
    pub ambiguous_with: Option<Element>,
}

/// Exact derivative of the symbolic wave, followed by the prefactor.
pub fn apply(op: &OperatorSpec, w: &PlaneWave) -> Result<ApplyResult> {
    if !op.prefactor.same_algebra(w.amplitude()) {
        return Err(domain("operator and wave live in different algebras"));
    }
    let factor = match op.axis {
        Axis::X => w.generator().scale(w.p()),
        Axis::T => w.generator().scale(-w.energy()),
    };
    let mut amplitude = w.amplitude().clone();
    for _ in 0..op.order {
        amplitude = &amplitude * &factor;
    }
    let amplitude = (&op.prefactor * &amplitude).scale(op.sign);
    let (eigenvalue, ambiguous_with) = eigenvalues(w.amplitude(), &amplitude);
    Ok(ApplyResult {
        wave: w.with_amplitude(amplitude),
        eigenvalue,
        ambiguous_with,
    })
}

/// Solves `lambda * alpha = target`. When `target` itself works it is the
/// preferred representative; a second solution from the smallest coordinate
/// plane `span{1}` or `span{1, e_r}` is reported as the alias.
fn eigenvalues(alpha: &Element, target: &Element) -> (Option<Element>, Option<Element>) {
    let tol = EIGEN_TOL * (1.0 + target.max_abs());
    let eigen_of = |lambda: &Element| (lambda * alpha).approx_eq(target, tol);
    let lambda = if eigen_of(target) {
        target.clone()
    } else {
        let r = alpha.right_mul_matrix();
        let (x, residual) = linalg::least_squares(&r, &DVector::from_column_slice(target.coeffs()));
        let candidate = Element::new(alpha.algebra().clone(), x.iter().copied().collect())
            .expect("dimension matches");
        if residual > tol || !eigen_of(&candidate) {
            return (None, None);
        }
        candidate
    };
    let spec = alpha.algebra();
    let n = spec.dim();
    let one = Element::one(spec);
    let planes = std::iter::once(vec![one.clone()])
        .chain((1..n).map(|r| vec![one.clone(), Element::basis(spec, r)]));
    for plane in planes {
        let products: Vec<Element> = plane.iter().map(|b| b * alpha).collect();
        let cols: Vec<&[f64]> = products.iter().map(Element::coeffs).collect();
        let Some(x) = solve_columns(&cols, target.coeffs()) else {
            continue;
        };
        let alias = plane
            .iter()
            .zip(x.iter())
            .fold(Element::zero(spec), |acc, (b, c)| acc + b.scale(*c));
        if eigen_of(&alias) && !alias.approx_eq(&lambda, 1e-9 * (1.0 + lambda.max_abs())) {
            return (Some(lambda), Some(alias));
        }
    }
    (Some(lambda), None)
}

/// Solves `sum_c x_c cols[c] = target` for a few columns by Gaussian
/// elimination with partial pivoting, which keeps results exact when the
/// columns hold small integers or halves. `None` if inconsistent.
fn solve_columns(cols: &[&[f64]], target: &[f64]) -> Option<Vec<f64>> {
    let m = cols.len();
    let n = target.len();
    let mut rows: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            cols.iter()
                .map(|c| c[r])
                .chain(std::iter::once(target[r]))
                .collect()
        })
        .collect();
    let scale = 1.0 + target.iter().fold(0.0f64, |a, t| a.max(t.abs()));
    let mut pivots = Vec::with_capacity(m);
    let mut next = 0;
    for c in 0..m {
        let best = (next..n).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs()))?;
        if rows[best][c].abs() < 1e-12 {
            return None;
        }
        rows.swap(next, best);
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let f = row[c] / pivot_row[c];
            if r != next && f != 0.0 {
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= f * p;
                }
            }
        }
        pivots.push(next);
        next += 1;
    }
    if rows[next..]
        .iter()
        .any(|row| row[m].abs() > EIGEN_TOL * scale)
    {
        return None;
    }
    Some(
        (0..m)
            .map(|c| rows[pivots[c]][m] / rows[pivots[c]][c])
            .collect(),
    )
}

/// One displayed prefactor identity: the operator applied to a wave family
/// multiplies the amplitude by `multiplier * p`; on the ideal-valued wave the
/// same result is also produced by `alias * p`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrefactorLine {
    pub operator: OperatorSpec,
    pub wave: WaveTag,
    pub multiplier: Element,
    pub alias: Option<Element>,
}

/// Operators `+j dx`, `-k dx`, `+k dx` on both wave families. Multipliers
/// are per unit wavenumber.
pub fn prefactor_table() -> Vec<PrefactorLine> {
    let ops = [("j", 1), ("k", -1), ("k", 1)];
    let mut lines = Vec::with_capacity(6);
    for (prefactor, sign) in ops {
        let op = OperatorSpec::oblique(prefactor, Axis::X, sign).expect("valid operator");
        for tag in [WaveTag::C, WaveTag::J] {
            let w = PlaneWave::from_tag(tag, 1.0, 0.5);
            let result = apply(&op, &w).expect("same algebra");
            lines.push(PrefactorLine {
                operator: op.clone(),
                wave: tag,
                multiplier: result.eigenvalue.expect("plane waves are eigenfunctions"),
                alias: result.ambiguous_with,
            });
        }
    }
    lines
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchroedingerForm {
    /// `-dx^2/(2m) w - i dt w`
    C,
    /// `-k dx^2/(2m) w - j dt w`
    J,
}

/// `(x, t)` pairs of the 8 x 8 verification grid on `[0, 2 pi]^2`.
pub fn verification_grid() -> Vec<(f64, f64)> {
    let axis: Vec<f64> = (0..8).map(|a| TAU * a as f64 / 7.0).collect();
    axis.iter()
        .flat_map(|&x| axis.iter().map(move |&t| (x, t)))
        .collect()
}

pub fn schroedinger_residual(form: SchroedingerForm, w: &PlaneWave, m: f64) -> Result<f64> {
    if m.is_nan() || m <= 0.0 {
        return Err(domain(format!("mass must be positive, got {m}")));
    }
    let (kinetic, time) = match form {
        SchroedingerForm::C => ("1", "i"),
        SchroedingerForm::J => ("k", "j"),
    };
    let spec = builtin("bicomplex_oblique")?;
    let kinetic = Element::parse(&spec, kinetic)?.scale(1.0 / (2.0 * m));
    let lhs = apply(&OperatorSpec::new(kinetic, Axis::X, -1)?.with_order(2)?, w)?.wave;
    let rhs = apply(&OperatorSpec::oblique(time, Axis::T, 1)?, w)?.wave;
    let mut worst: f64 = 0.0;
    for (x, t) in verification_grid() {
        worst = worst.max(lhs.eval(x, t)?.max_abs_diff(&rhs.eval(x, t)?));
    }
    Ok(worst)
}

/// `dagger(w) * w` at one point.
pub fn modulus(w: &PlaneWave, x: f64, t: f64) -> Result<Element> {
    let v = w.eval(x, t)?;
    Ok(&conjugate(&ConjugationKind::Dagger, &v)? * &v)
}

/// `dagger(w) * (op w)`, required to be the same at every grid point.
pub fn expectation(op: &OperatorSpec, w: &PlaneWave) -> Result<Element> {
    let applied = apply(op, w)?.wave;
    let mut first: Option<Element> = None;
    for (x, t) in verification_grid() {
        let v = w.eval(x, t)?;
        let value = &conjugate(&ConjugationKind::Dagger, &v)? * &applied.eval(x, t)?;
        match &first {
            None => first = Some(value),
            Some(f) if f.approx_eq(&value, CONSTANT_TOL * (1.0 + f.max_abs())) => {}
            Some(f) => {
                return Err(Error::Contract(format!(
                "expectation of {op} is not constant: `{f}` at the origin, `{value}` at ({x}, {t})"
            )))
            }
        }
    }
    Ok(first.expect("grid is non-empty"))
}
