//! Algebras described by signed single-term structure constants.
//!
//! Every product of two basis units is either zero or plus/minus exactly one
//! basis unit. Index 0 is always the two-sided identity `1`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg};

use crate::error::{Error, Result};

/// One cell of a multiplication table: `coeff * e_index` with `coeff` in {-1, 0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBasisTerm {
    pub coeff: i8,
    pub index: usize,
}

impl SignedBasisTerm {
    pub const ZERO: Self = Self { coeff: 0, index: 0 };

    pub fn plus(index: usize) -> Self {
        Self { coeff: 1, index }
    }

    pub fn minus(index: usize) -> Self {
        Self { coeff: -1, index }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff == 0
    }
}

/// A finite-dimensional unital real algebra.
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    name: String,
    labels: Vec<String>,
    /// Row-major `dim * dim` table; `table[r * dim + s]` is `e_r * e_s`.
    table: Vec<SignedBasisTerm>,
    associative: bool,
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.labels == other.labels && self.table == other.table
    }
}

impl AlgebraSpec {
    /// Builds an algebra from its basis labels and a full row-major table.
    ///
    /// The identity row and column are checked, not filled in.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<SignedBasisTerm>,
    ) -> Result<Self> {
        let name = name.into();
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if labels[0] != "1" {
            return Err(Error::InvalidAlgebra(format!(
                "label of the identity must be `1`, got `{}`",
                labels[0]
            )));
        }
        if table.len() != dim * dim {
            return Err(Error::InvalidAlgebra(format!(
                "table has {} entries, expected {}",
                table.len(),
                dim * dim
            )));
        }
        for (pos, term) in table.iter().enumerate() {
            if !(-1..=1).contains(&term.coeff) {
                return Err(Error::InvalidAlgebra(format!(
                    "coefficient {} at cell {pos} is not in {{-1, 0, 1}}",
                    term.coeff
                )));
            }
            if term.coeff != 0 && term.index >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "basis index {} at cell {pos} out of range",
                    term.index
                )));
            }
        }
        for r in 0..dim {
            let unit = SignedBasisTerm::plus(r);
            if table[r] != unit || table[r * dim] != unit {
                return Err(Error::InvalidAlgebra(format!(
                    "index 0 is not a two-sided identity for `{}`",
                    labels[r]
                )));
            }
        }
        let mut spec = Self {
            name,
            labels,
            table,
            associative: false,
        };
        spec.associative = spec.basis_associative();
        Ok(spec)
    }

    /// Builds an algebra from a table written with basis labels,
    /// e.g. `["1", "i", "i", "-1"]` for the complex numbers.
    pub fn from_label_table(name: &str, labels: &[&str], cells: &[&str]) -> Result<Self> {
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let table = cells
            .iter()
            .map(|cell| {
                parse_term(cell, &index)
                    .ok_or_else(|| Error::InvalidAlgebra(format!("unknown table entry `{cell}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, labels.iter().map(|s| s.to_string()).collect(), table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `e_r * e_s`.
    pub fn product(&self, r: usize, s: usize) -> SignedBasisTerm {
        self.table[r * self.dim() + s]
    }

    /// True when `(e_r e_s) e_t = e_r (e_s e_t)` for every basis triple,
    /// which decides associativity of the whole algebra by trilinearity.
    pub fn is_associative(&self) -> bool {
        self.associative
    }

    fn basis_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|r| {
            (0..n).all(|s| {
                (0..n).all(|t| {
                    let left = self.term_mul(self.product(r, s), t, false);
                    let right = self.term_mul(self.product(s, t), r, true);
                    left == right
                })
            })
        })
    }

    /// Multiplies a single signed term by basis unit `unit`, on the right
    /// (`term * e_unit`) or on the left (`e_unit * term`).
    fn term_mul(&self, term: SignedBasisTerm, unit: usize, unit_on_left: bool) -> SignedBasisTerm {
        if term.is_zero() {
            return SignedBasisTerm::ZERO;
        }
        let p = if unit_on_left {
            self.product(unit, term.index)
        } else {
            self.product(term.index, unit)
        };
        if p.is_zero() {
            SignedBasisTerm::ZERO
        } else {
            SignedBasisTerm {
                coeff: p.coeff * term.coeff,
                index: p.index,
            }
        }
    }

    /// Bilinear product of two coordinate vectors. Generic so the same table
    /// drives both floating and exact integer arithmetic.
    pub fn mul_coords<T>(&self, a: &[T], b: &[T]) -> Vec<T>
    where
        T: Copy + Default + PartialEq + Add<Output = T> + Mul<Output = T> + Neg<Output = T>,
    {
        let n = self.dim();
        debug_assert_eq!(a.len(), n);
        debug_assert_eq!(b.len(), n);
        let zero = T::default();
        let mut out = vec![zero; n];
        for (r, &ar) in a.iter().enumerate() {
            if ar == zero {
                continue;
            }
            for (s, &bs) in b.iter().enumerate() {
                if bs == zero {
                    continue;
                }
                let term = self.product(r, s);
                match term.coeff {
                    1 => out[term.index] = out[term.index] + ar * bs,
                    -1 => out[term.index] = out[term.index] + -(ar * bs),
                    _ => {}
                }
            }
        }
        out
    }

    /// Parses the line-based text format:
    ///
    /// ```text
    /// algebra complex
    /// dim 2
    /// basis 1 i
    /// i*i = -1
    /// ```
    ///
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let header = |lines: &mut dyn Iterator<Item = (usize, &str)>, key: &str| {
            let (no, line) = lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("missing `{key}` line"),
            })?;
            let rest = line
                .strip_prefix(key)
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| Error::Parse {
                    line: no,
                    msg: format!("expected `{key} ...`"),
                })?;
            Ok::<_, Error>((no, rest.trim().to_string()))
        };

        let (_, name) = header(&mut lines, "algebra")?;
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::Parse {
                line: 1,
                msg: "algebra name must be a single identifier".into(),
            });
        }
        let (dim_line, dim_text) = header(&mut lines, "dim")?;
        let dim: usize = dim_text.parse().map_err(|_| Error::Parse {
            line: dim_line,
            msg: format!("invalid dimension `{dim_text}`"),
        })?;
        if dim == 0 {
            return Err(Error::Parse {
                line: dim_line,
                msg: "dimension must be positive".into(),
            });
        }
        let (basis_line, basis_text) = header(&mut lines, "basis")?;
        let labels: Vec<String> = basis_text.split_whitespace().map(str::to_string).collect();
        if labels.len() != dim {
            return Err(Error::Parse {
                line: basis_line,
                msg: format!("expected {dim} basis labels, got {}", labels.len()),
            });
        }
        if labels[0] != "1" {
            return Err(Error::Parse {
                line: basis_line,
                msg: "first basis label must be `1`".into(),
            });
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.starts_with('-') || l.contains('*') || l.contains('=') {
                return Err(Error::Parse {
                    line: basis_line,
                    msg: format!("invalid basis label `{l}`"),
                });
            }
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::Parse {
                    line: basis_line,
                    msg: format!("duplicate basis label `{l}`"),
                });
            }
        }

        let mut cells: Vec<Option<SignedBasisTerm>> = vec![None; dim * dim];
        for r in 0..dim {
            cells[r] = Some(SignedBasisTerm::plus(r));
            cells[r * dim] = Some(SignedBasisTerm::plus(r));
        }
        let mut last_line = basis_line;
        for (no, line) in lines {
            last_line = no;
            let err = |msg: String| Error::Parse { line: no, msg };
            let (lhs, rhs) = line
                .split_once('=')
                .ok_or_else(|| err("expected `<a>*<b> = <c>`".into()))?;
            let (a, b) = lhs
                .trim()
                .split_once('*')
                .ok_or_else(|| err("expected `<a>*<b>` on the left-hand side".into()))?;
            let (a, b) = (a.trim(), b.trim());
            let r = *index
                .get(a)
                .ok_or_else(|| err(format!("unknown label `{a}`")))?;
            let s = *index
                .get(b)
                .ok_or_else(|| err(format!("unknown label `{b}`")))?;
            if r == 0 || s == 0 {
                return Err(err("products with the identity are implied".into()));
            }
            let rhs = rhs.trim();
            let term = parse_term(rhs, &index).ok_or_else(|| {
                if rhs.split_whitespace().count() > 1 || rhs.contains('+') {
                    err(format!("`{rhs}` is not a single signed basis term"))
                } else {
                    err(format!("unknown label `{rhs}`"))
                }
            })?;
            let cell = &mut cells[r * dim + s];
            if cell.is_some() {
                return Err(err(format!("duplicate product `{a}*{b}`")));
            }
            *cell = Some(term);
        }
        if let Some(pos) = cells.iter().position(Option::is_none) {
            return Err(Error::Parse {
                line: last_line,
                msg: format!(
                    "missing product `{}*{}`",
                    labels[pos / dim],
                    labels[pos % dim]
                ),
            });
        }
        let table = cells.into_iter().map(Option::unwrap).collect();
        Self::new(name, labels, table).map_err(|e| Error::Parse {
            line: last_line,
            msg: e.to_string(),
        })
    }

    /// Renders the algebra in the text format accepted by [`AlgebraSpec::parse`].
    pub fn to_spec_text(&self) -> String {
        let n = self.dim();
        let mut out = String::new();
        let _ = writeln!(out, "algebra {}", self.name);
        let _ = writeln!(out, "dim {n}");
        let _ = writeln!(out, "basis {}", self.labels.join(" "));
        for r in 1..n {
            for s in 1..n {
                let _ = writeln!(
                    out,
                    "{}*{} = {}",
                    self.labels[r],
                    self.labels[s],
                    self.term_label(self.product(r, s))
                );
            }
        }
        out
    }

    /// `0`, `x` or `-x` for a signed basis term.
    pub fn term_label(&self, term: SignedBasisTerm) -> String {
        match term.coeff {
            0 => "0".to_string(),
            1 => self.labels[term.index].clone(),
            _ => format!("-{}", self.labels[term.index]),
        }
    }
}

fn parse_term(text: &str, index: &HashMap<&str, usize>) -> Option<SignedBasisTerm> {
    let text = text.trim();
    if text == "0" {
        return Some(SignedBasisTerm::ZERO);
    }
    let (coeff, label) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest.trim()),
        None => (1, text.strip_prefix('+').unwrap_or(text).trim()),
    };
    index
        .get(label)
        .map(|&i| SignedBasisTerm { coeff, index: i })
}
