use std::fmt::Write as _;

use crate::algebra::Element;
use crate::error::{domain, Result};
use crate::format::fmt_float;

fn check_oblique(v: &Element) -> Result<()> {
    if v.algebra().name() != "bicomplex_oblique" {
        return Err(domain(format!(
            "CSV output uses the oblique bicomplex basis, got an element of `{}`",
            v.algebra().name()
        )));
    }
    Ok(())
}

fn push_coeffs(out: &mut String, v: &Element) {
    for c in v.coeffs() {
        out.push(',');
        out.push_str(&fmt_float(*c));
    }
    out.push('\n');
}

/// `x,t,c0,c1,c2,c3` rows.
pub fn samples_csv(rows: &[(f64, f64, Element)]) -> Result<String> {
    let mut out = String::from("x,t,c0,c1,c2,c3\n");
    for (x, t, v) in rows {
        check_oblique(v)?;
        let _ = write!(out, "{},{}", fmt_float(*x), fmt_float(*t));
        push_coeffs(&mut out, v);
    }
    Ok(out)
}

/// `p,c0,c1,c2,c3` rows.
pub fn spectrum_csv(rows: &[(f64, Element)]) -> Result<String> {
    let mut out = String::from("p,c0,c1,c2,c3\n");
    for (p, v) in rows {
        check_oblique(v)?;
        out.push_str(&fmt_float(*p));
        push_coeffs(&mut out, v);
    }
    Ok(out)
}
