//! The built-in algebras, with their tables written out row by row.
//!
//! Tables read as row times column.

use std::sync::{Arc, OnceLock};

use super::spec::AlgebraSpec;
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 7] = [
    "complex",
    "dual",
    "split_complex",
    "quaternion",
    "biquaternion",
    "bicomplex_canonical",
    "bicomplex_oblique",
];

#[rustfmt::skip]
const COMPLEX: (&[&str], &[&str]) = (
    &["1", "i"],
    &[
        "1", "i",
        "i", "-1",
    ],
);

#[rustfmt::skip]
const DUAL: (&[&str], &[&str]) = (
    &["1", "Omega"],
    &[
        "1",     "Omega",
        "Omega", "0",
    ],
);

#[rustfmt::skip]
const SPLIT_COMPLEX: (&[&str], &[&str]) = (
    &["1", "sigma"],
    &[
        "1",     "sigma",
        "sigma", "1",
    ],
);

#[rustfmt::skip]
const QUATERNION: (&[&str], &[&str]) = (
    &["1", "i1", "i2", "i3"],
    &[
        "1",  "i1",  "i2",  "i3",
        "i1", "-1",  "i3",  "-i2",
        "i2", "-i3", "-1",  "i1",
        "i3", "i2",  "-i1", "-1",
    ],
);

#[rustfmt::skip]
const BIQUATERNION: (&[&str], &[&str]) = (
    &["1", "i0", "i1", "i2", "i3", "sigma1", "sigma2", "sigma3"],
    &[
        "1",      "i0",  "i1",      "i2",      "i3",      "sigma1",  "sigma2",  "sigma3",
        "i0",     "-1",  "sigma1",  "sigma2",  "sigma3",  "-i1",     "-i2",     "-i3",
        "i1",     "sigma1", "-1",   "i3",      "-i2",     "-i0",     "sigma3",  "-sigma2",
        "i2",     "sigma2", "-i3",  "-1",      "i1",      "-sigma3", "-i0",     "sigma1",
        "i3",     "sigma3", "i2",   "-i1",     "-1",      "sigma2",  "-sigma1", "-i0",
        "sigma1", "-i1", "-i0",     "sigma3",  "-sigma2", "1",       "-i3",     "i2",
        "sigma2", "-i2", "-sigma3", "-i0",     "sigma1",  "i3",      "1",       "-i1",
        "sigma3", "-i3", "sigma2",  "-sigma1", "-i0",     "-i2",     "i1",      "1",
    ],
);

#[rustfmt::skip]
const BICOMPLEX_CANONICAL: (&[&str], &[&str]) = (
    &["1", "i0", "i1", "sigma"],
    &[
        "1",     "i0",  "i1",  "sigma",
        "i0",    "-1",  "sigma", "-i1",
        "i1",    "sigma", "-1",  "-i0",
        "sigma", "-i1", "-i0", "1",
    ],
);

#[rustfmt::skip]
const BICOMPLEX_OBLIQUE: (&[&str], &[&str]) = (
    &["1", "i", "j", "k"],
    &[
        "1", "i",  "j",  "k",
        "i", "-1", "-k", "j",
        "j", "-k", "-k", "j",
        "k", "j",  "j",  "k",
    ],
);

fn table_for(name: &str) -> Option<(&'static [&'static str], &'static [&'static str])> {
    Some(match name {
        "complex" => COMPLEX,
        "dual" => DUAL,
        "split_complex" => SPLIT_COMPLEX,
        "quaternion" => QUATERNION,
        "biquaternion" => BIQUATERNION,
        "bicomplex_canonical" => BICOMPLEX_CANONICAL,
        "bicomplex_oblique" => BICOMPLEX_OBLIQUE,
        _ => return None,
    })
}

/// Returns the shared instance of a built-in algebra.
pub fn builtin(name: &str) -> Result<Arc<AlgebraSpec>> {
    static CACHE: [OnceLock<Arc<AlgebraSpec>>; 7] = [const { OnceLock::new() }; 7];
    let slot = BUILTIN_NAMES
        .iter()
        .position(|n| *n == name)
        .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
    let spec = CACHE[slot].get_or_init(|| {
        let (labels, cells) = table_for(name).expect("listed builtin");
        Arc::new(
            AlgebraSpec::from_label_table(name, labels, cells)
                .expect("builtin tables are well formed"),
        )
    });
    Ok(Arc::clone(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::spec::SignedBasisTerm;

    fn cell(spec: &AlgebraSpec, a: &str, b: &str) -> String {
        let r = spec.index_of(a).unwrap();
        let s = spec.index_of(b).unwrap();
        spec.term_label(spec.product(r, s))
    }

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = BUILTIN_NAMES
            .iter()
            .map(|n| builtin(n).unwrap().dim())
            .collect();
        assert_eq!(dims, vec![2, 2, 2, 4, 8, 4, 4]);
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert_eq!(
            builtin("octonion").unwrap_err(),
            Error::UnknownAlgebra("octonion".into())
        );
    }

    #[test]
    fn all_builtins_are_associative() {
        for name in BUILTIN_NAMES {
            assert!(builtin(name).unwrap().is_associative(), "{name}");
        }
    }

    #[test]
    fn quaternion_cells() {
        let q = builtin("quaternion").unwrap();
        assert_eq!(cell(&q, "i1", "i2"), "i3");
        assert_eq!(cell(&q, "i2", "i1"), "-i3");
    }

    #[test]
    fn oblique_cells() {
        let b = builtin("bicomplex_oblique").unwrap();
        assert_eq!(cell(&b, "j", "j"), "-k");
        assert_eq!(cell(&b, "k", "k"), "k");
        assert_eq!(cell(&b, "k", "j"), "j");
        assert_eq!(b.labels(), ["1", "i", "j", "k"]);
    }

    #[test]
    fn biquaternion_sigma_relations() {
        let b = builtin("biquaternion").unwrap();
        assert_eq!(cell(&b, "sigma1", "sigma2"), "-i3");
        // sigma_q sigma_r = delta_qr + eps_qrs i0 sigma_s
        let i0 = b.index_of("i0").unwrap();
        for q in 1..=3usize {
            for r in 1..=3usize {
                let sq = b.index_of(&format!("sigma{q}")).unwrap();
                let sr = b.index_of(&format!("sigma{r}")).unwrap();
                let got = b.product(sq, sr);
                if q == r {
                    assert_eq!(got, SignedBasisTerm::plus(0));
                } else {
                    let s = 6 - q - r;
                    let eps: i8 = if (q % 3) + 1 == r { 1 } else { -1 };
                    let ss = b.index_of(&format!("sigma{s}")).unwrap();
                    let i0_sigma = b.product(i0, ss);
                    assert_eq!(got.index, i0_sigma.index);
                    assert_eq!(got.coeff, eps * i0_sigma.coeff);
                }
            }
        }
    }

    #[test]
    fn bicomplex_canonical_is_commutative() {
        let b = builtin("bicomplex_canonical").unwrap();
        for r in 0..4 {
            for s in 0..4 {
                assert_eq!(b.product(r, s), b.product(s, r));
            }
        }
        assert_eq!(cell(&b, "i0", "i1"), "sigma");
    }
}
