//! Multiplication-table rendering.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::algebra::AlgebraSpec;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Ascii,
    Csv,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ascii" => Ok(TableFormat::Ascii),
            "csv" => Ok(TableFormat::Csv),
            other => Err(Error::Domain(format!(
                "unknown table format `{other}` (expected ascii or csv)"
            ))),
        }
    }
}

/// Cell `(r, s)` holds the label of `e_r * e_s`: row times column.
fn cells(spec: &AlgebraSpec) -> Vec<Vec<String>> {
    let n = spec.dim();
    let mut rows = Vec::with_capacity(n + 1);
    let mut header = vec!["*".to_string()];
    header.extend(spec.labels().iter().cloned());
    rows.push(header);
    for r in 0..n {
        let mut row = vec![spec.label(r).to_string()];
        row.extend((0..n).map(|s| spec.term_label(spec.product(r, s))));
        rows.push(row);
    }
    rows
}

pub fn render_table(spec: &AlgebraSpec, format: TableFormat) -> String {
    let rows = cells(spec);
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            for row in rows {
                let _ = writeln!(out, "{}", row.join(","));
            }
        }
        TableFormat::Ascii => {
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
            let line = |row: &[String]| {
                let body: Vec<String> = row[1..].iter().map(|c| format!("{c:>width$}")).collect();
                format!("{:>width$} | {}", row[0], body.join(" "))
            };
            let header = line(&rows[0]);
            let _ = writeln!(out, "# {}", spec.name());
            let _ = writeln!(out, "{header}");
            let _ = writeln!(
                out,
                "{}+{}",
                "-".repeat(width + 1),
                "-".repeat(header.len() - width - 2)
            );
            for row in &rows[1..] {
                let _ = writeln!(out, "{}", line(row));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;

    #[test]
    fn quaternion_ascii() {
        let text = render_table(&builtin("quaternion").unwrap(), TableFormat::Ascii);
        let expected = "\
# quaternion
  * |   1  i1  i2  i3
----+----------------
  1 |   1  i1  i2  i3
 i1 |  i1  -1  i3 -i2
 i2 |  i2 -i3  -1  i1
 i3 |  i3  i2 -i1  -1
";
        assert_eq!(text, expected);
    }

    #[test]
    fn dual_csv() {
        let text = render_table(&builtin("dual").unwrap(), TableFormat::Csv);
        assert_eq!(text, "*,1,Omega\n1,1,Omega\nOmega,Omega,0\n");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<TableFormat>().unwrap(), TableFormat::Csv);
        assert!("html".parse::<TableFormat>().is_err());
    }
}
