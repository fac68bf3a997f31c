use std::sync::Arc;

use crate::algebra::{builtin, AlgebraSpec, Element};
use crate::error::{domain, Error, Result};

/// Metric signature `diag(1, -1, -1, -1)`.
pub const ETA: [i64; 4] = [1, -1, -1, -1];

/// Square matrix of elements of one algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixOverAlgebra {
    algebra: Arc<AlgebraSpec>,
    n: usize,
    entries: Vec<Element>,
}

impl MatrixOverAlgebra {
    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(domain("matrix needs at least one row"));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(domain("matrix must be square"));
        }
        let algebra = rows[0][0].algebra().clone();
        let entries: Vec<Element> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| **e.algebra() != *algebra) {
            return Err(domain("matrix entries must share one algebra"));
        }
        Ok(Self {
            algebra,
            n,
            entries,
        })
    }

    pub fn identity(algebra: &Arc<AlgebraSpec>, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|idx| {
                if idx / n == idx % n {
                    Element::one(algebra)
                } else {
                    Element::zero(algebra)
                }
            })
            .collect();
        Self {
            algebra: algebra.clone(),
            n,
            entries,
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        &self.algebra
    }

    pub fn get(&self, row: usize, col: usize) -> &Element {
        &self.entries[row * self.n + col]
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || *self.algebra != *other.algebra {
            return Err(domain("matrices differ in size or algebra"));
        }
        Ok(())
    }

    /// Row times column with the algebra product, left factor first.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let entries = (0..n * n)
            .map(|idx| {
                let (r, c) = (idx / n, idx % n);
                (0..n).fold(Element::zero(&self.algebra), |acc, m| {
                    acc + self.get(r, m) * other.get(m, c)
                })
            })
            .collect();
        Ok(Self {
            algebra: self.algebra.clone(),
            n,
            entries,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            algebra: self.algebra.clone(),
            n: self.n,
            entries,
        })
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            algebra: self.algebra.clone(),
            n: self.n,
            entries: self.entries.iter().map(|e| e.scale(factor)).collect(),
        }
    }

    fn to_exact(&self) -> Result<ExactMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let coords = e
                .coeffs()
                .iter()
                .map(|&c| {
                    if c.fract() == 0.0 && c.abs() < 1e15 {
                        Ok(c as i64)
                    } else {
                        Err(domain(format!("entry `{e}` has non-integer coordinates")))
                    }
                })
                .collect::<Result<Vec<i64>>>()?;
            entries.push(coords);
        }
        Ok(ExactMatrix { n: self.n, entries })
    }
}

/// Integer coordinates of every entry, row-major.
struct ExactMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl ExactMatrix {
    /// `self * other + other * self` in exact arithmetic.
    fn anticommutator(&self, other: &Self, spec: &AlgebraSpec) -> Vec<Vec<i64>> {
        let n = self.n;
        let dim = spec.dim();
        let product = |a: &Self, b: &Self, r: usize, c: usize| {
            (0..n).fold(vec![0i64; dim], |acc, m| {
                let term = spec.mul_coords(&a.entries[r * n + m], &b.entries[m * n + c]);
                acc.iter().zip(&term).map(|(x, y)| x + y).collect()
            })
        };
        (0..n * n)
            .map(|idx| {
                let (r, c) = (idx / n, idx % n);
                let ab = product(self, other, r, c);
                let ba = product(other, self, r, c);
                ab.iter().zip(&ba).map(|(x, y)| x + y).collect()
            })
            .collect()
    }
}

/// Dirac coefficients as 2 x 2 matrices over the biquaternions:
/// `gamma0 = diag(1, -1)`, `gamma_r = [[0, sigma_r], [-sigma_r, 0]]`.
pub fn gamma_set() -> [MatrixOverAlgebra; 4] {
    let b = builtin("biquaternion").expect("builtin");
    let el = |t: &str| Element::parse(&b, t).expect("valid literal");
    let m = |rows: [[&str; 2]; 2]| {
        MatrixOverAlgebra::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|t| el(t)).collect())
                .collect(),
        )
        .expect("2 x 2 over one algebra")
    };
    [
        m([["1", "0"], ["0", "-1"]]),
        m([["0", "sigma1"], ["-sigma1", "0"]]),
        m([["0", "sigma2"], ["-sigma2", "0"]]),
        m([["0", "sigma3"], ["-sigma3", "0"]]),
    ]
}

/// First offending matrix entry of an anticommutator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordFailure {
    pub row: usize,
    pub col: usize,
    pub expected: Vec<i64>,
    pub actual: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub mu: usize,
    pub rho: usize,
    pub failure: Option<CliffordFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordReport {
    pub pairs: Vec<PairCheck>,
}

impl CliffordReport {
    pub fn holds(&self) -> bool {
        self.pairs.iter().all(|p| p.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck> {
        self.pairs.iter().filter(|p| p.failure.is_some())
    }
}

/// Checks `{gamma_mu, gamma_rho} = 2 eta_{mu rho} 1` for all 16 ordered
/// pairs with integer coordinates.
pub fn check_clifford(gammas: &[MatrixOverAlgebra]) -> Result<CliffordReport> {
    if gammas.len() != 4 {
        return Err(domain(format!(
            "need 4 gamma matrices, got {}",
            gammas.len()
        )));
    }
    for g in &gammas[1..] {
        gammas[0].check_compatible(g)?;
    }
    let spec = gammas[0].algebra().clone();
    let n = gammas[0].size();
    let exact = gammas
        .iter()
        .map(MatrixOverAlgebra::to_exact)
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::with_capacity(16);
    for mu in 0..4 {
        for rho in 0..4 {
            let anti = exact[mu].anticommutator(&exact[rho], &spec);
            let failure = (0..n * n).find_map(|idx| {
                let (r, c) = (idx / n, idx % n);
                let mut expected = vec![0i64; spec.dim()];
                if r == c && mu == rho {
                    expected[0] = 2 * ETA[mu];
                }
                (anti[idx] != expected).then(|| CliffordFailure {
                    row: r,
                    col: c,
                    expected,
                    actual: anti[idx].clone(),
                })
            });
            pairs.push(PairCheck { mu, rho, failure });
        }
    }
    Ok(CliffordReport { pairs })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpinEigen {
    pub state: Element,
    pub eigenvalue: i8,
    pub partner: Element,
}

/// `sigma_r (1 + s sigma_r) = s (1 + s sigma_r)` and
/// `(1 + s sigma_r)(1 - s sigma_r) = 0`, checked exactly.
pub fn spin_eigen_check(r: usize, sign: i8) -> Result<SpinEigen> {
    if !(1..=3).contains(&r) {
        return Err(domain(format!("spin axis must be 1, 2 or 3, got {r}")));
    }
    if sign != 1 && sign != -1 {
        return Err(domain(format!("sign must be +1 or -1, got {sign}")));
    }
    let b = builtin("biquaternion")?;
    let sigma_index = b
        .index_of(&format!("sigma{r}"))
        .expect("biquaternion label");
    let s = i64::from(sign);
    let mut state = vec![0i64; b.dim()];
    state[0] = 1;
    state[sigma_index] = s;
    let mut partner = vec![0i64; b.dim()];
    partner[0] = 1;
    partner[sigma_index] = -s;
    let mut sigma = vec![0i64; b.dim()];
    sigma[sigma_index] = 1;

    let lhs = b.mul_coords(&sigma, &state);
    let rhs: Vec<i64> = state.iter().map(|c| s * c).collect();
    if lhs != rhs {
        return Err(Error::Check(format!(
            "sigma{r} is not an eigen-element with eigenvalue {sign}"
        )));
    }
    if b.mul_coords(&state, &partner).iter().any(|c| *c != 0) {
        return Err(Error::Check(format!(
            "partner of sigma{r} state does not annihilate it"
        )));
    }
    let to_element = |v: Vec<i64>| {
        Element::new(b.clone(), v.into_iter().map(|c| c as f64).collect()).expect("dimension")
    };
    Ok(SpinEigen {
        state: to_element(state),
        eigenvalue: sign,
        partner: to_element(partner),
    })
}
