//! Named verification suites. Each assertion becomes one
//! `name: ok` or `name: FAIL(detail)` line.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{builtin, Element};
use crate::analysis::check_ft_conditions;
use crate::error::{Error, Result};
use crate::relativity::{
    boost, check_clifford, compose_velocities, gamma_set, kg_dispersion_residual, minkowski_dot,
    spin_eigen_check, FourVector,
};
use crate::wave::{
    delta_concentration_ratio, gaussian_windowed, generalized_ft, kernel, linspace, make_phi_c,
    make_phi_j, modulus, parseval_check, prefactor_table, schroedinger_residual, Direction,
    PlaneWave, SchroedingerForm, WaveTag,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Clifford,
    Prefactors,
    Modulus,
    Schroedinger,
    Ft,
    Spin,
    Lorentz,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "clifford",
        "prefactors",
        "modulus",
        "schroedinger",
        "ft",
        "spin",
        "lorentz",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "clifford" => Suite::Clifford,
            "prefactors" => Suite::Prefactors,
            "modulus" => Suite::Modulus,
            "schroedinger" => Suite::Schroedinger,
            "ft" => Suite::Ft,
            "spin" => Suite::Spin,
            "lorentz" => Suite::Lorentz,
            "all" => Suite::All,
            other => {
                return Err(Error::Domain(format!(
                    "unknown suite `{other}` (expected one of {})",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub failure: Option<String>,
}

impl CheckLine {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Self {
            name: name.into(),
            failure,
        }
    }

    fn from_result(name: impl Into<String>, result: Result<Option<String>>) -> Self {
        let failure = match result {
            Ok(f) => f,
            Err(e) => Some(e.to_string()),
        };
        Self::new(name, failure)
    }

    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: ok", self.name),
            Some(detail) => write!(f, "{}: FAIL({detail})", self.name),
        }
    }
}

pub fn run_suite(suite: Suite) -> Vec<CheckLine> {
    match suite {
        Suite::Clifford => clifford(),
        Suite::Prefactors => prefactors(),
        Suite::Modulus => moduli(),
        Suite::Schroedinger => schroedinger(),
        Suite::Ft => fourier(),
        Suite::Spin => spin(),
        Suite::Lorentz => lorentz(),
        Suite::All => [
            Suite::Clifford,
            Suite::Prefactors,
            Suite::Modulus,
            Suite::Schroedinger,
            Suite::Ft,
            Suite::Spin,
            Suite::Lorentz,
        ]
        .into_iter()
        .flat_map(run_suite)
        .collect(),
    }
}

fn within(value: f64, tol: f64, what: &str) -> Option<String> {
    (value.is_nan() || value >= tol).then(|| format!("{what} {value:e} >= {tol:e}"))
}

fn oblique(text: &str) -> Element {
    Element::parse(&builtin("bicomplex_oblique").expect("builtin"), text).expect("valid literal")
}

fn clifford() -> Vec<CheckLine> {
    match check_clifford(&gamma_set()) {
        Err(e) => vec![CheckLine::new("gamma", Some(e.to_string()))],
        Ok(report) => report
            .pairs
            .into_iter()
            .map(|p| {
                let failure = p.failure.map(|f| {
                    format!(
                        "entry ({},{}) is {:?}, expected {:?}",
                        f.row, f.col, f.actual, f.expected
                    )
                });
                CheckLine::new(format!("gamma[{},{}]", p.mu, p.rho), failure)
            })
            .collect(),
    }
}

/// The six displayed prefactor identities with multipliers per unit
/// wavenumber, and the real/complex alias on the ideal-valued wave.
const PREFACTOR_LINES: [(&str, &str, Option<&str>); 6] = [
    ("+j", "-k", None),
    ("+j", "-k", Some("-1")),
    ("-k", "-j", None),
    ("-k", "-j", Some("-i")),
    ("+k", "j", None),
    ("+k", "j", Some("i")),
];

fn prefactors() -> Vec<CheckLine> {
    let table = prefactor_table();
    table
        .iter()
        .zip(PREFACTOR_LINES)
        .map(|(line, (op, multiplier, alias))| {
            let name = format!("prefactor[{op}dx,{}]", line.wave);
            let mut problems = Vec::new();
            if line.multiplier != oblique(multiplier) {
                problems.push(format!("multiplier {} != {multiplier}", line.multiplier));
            }
            match (alias, &line.alias) {
                (None, None) => {}
                (Some(want), Some(got)) if *got == oblique(want) => {}
                (want, got) => problems.push(format!(
                    "alias {} != {}",
                    got.as_ref().map_or("none".to_string(), ToString::to_string),
                    want.unwrap_or("none")
                )),
            }
            let failure = (!problems.is_empty()).then(|| problems.join("; "));
            CheckLine::new(name, failure)
        })
        .collect()
}

/// 1000 `(x, t)` points on `[-10, 10] x [0, 5]`.
pub fn modulus_grid() -> Vec<(f64, f64)> {
    let xs = linspace(-10.0, 10.0, 40);
    let ts = linspace(0.0, 5.0, 25);
    xs.iter()
        .flat_map(|&x| ts.iter().map(move |&t| (x, t)))
        .collect()
}

fn max_modulus_deviation(w: &PlaneWave, expected: &Element) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (x, t) in modulus_grid() {
        worst = worst.max(modulus(w, x, t)?.max_abs_diff(expected));
    }
    Ok(worst)
}

fn moduli() -> Vec<CheckLine> {
    let (p, e) = (1.0, 0.5);
    vec![
        CheckLine::from_result(
            "phiJ_modulus",
            max_modulus_deviation(&make_phi_j(p, e), &oblique("k"))
                .map(|d| within(d, 1e-9, "max deviation from k")),
        ),
        CheckLine::from_result(
            "phiC_modulus",
            max_modulus_deviation(&make_phi_c(p, e), &oblique("1"))
                .map(|d| within(d, 1e-9, "max deviation from 1")),
        ),
    ]
}

fn schroedinger() -> Vec<CheckLine> {
    let (p, m) = (1.0, 1.0);
    let e = p * p / (2.0 * m);
    vec![
        CheckLine::from_result(
            "phiC_C_form",
            schroedinger_residual(SchroedingerForm::C, &make_phi_c(p, e), m)
                .map(|r| within(r, 1e-9, "residual")),
        ),
        CheckLine::from_result(
            "phiJ_J_form",
            schroedinger_residual(SchroedingerForm::J, &make_phi_j(p, e), m)
                .map(|r| within(r, 1e-9, "residual")),
        ),
    ]
}

fn letter(tag: WaveTag) -> char {
    match tag {
        WaveTag::C => 'C',
        WaveTag::J => 'J',
    }
}

fn fourier() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    for tag in [WaveTag::C, WaveTag::J] {
        let (a, b) = kernel(tag);
        let failure = (!check_ft_conditions(&a, &b)).then(|| format!("({a}, {b}) rejected"));
        lines.push(CheckLine::new(
            format!("kernel_{}_admissible", letter(tag)),
            failure,
        ));
    }

    let q = builtin("quaternion").expect("builtin");
    let accepted: Vec<String> = (1..4)
        .flat_map(|r| (0..4).map(move |s| (r, s)))
        .filter(|&(r, s)| check_ft_conditions(&Element::basis(&q, r), &Element::basis(&q, s)))
        .map(|(r, s)| format!("({}, {})", q.label(r), q.label(s)))
        .collect();
    let failure = (!accepted.is_empty()).then(|| format!("accepted {}", accepted.join(" ")));
    lines.push(CheckLine::new("quaternion_kernels_rejected", failure));

    let l = 40.0 * PI;
    for tag in [WaveTag::C, WaveTag::J] {
        let failure = match delta_concentration_ratio(tag, tag, 2.0, l, 2048) {
            Ok(r) if r > 1.8 => None,
            Ok(r) => Some(format!("growth ratio {r} <= 1.8")),
            Err(e) => Some(e.to_string()),
        };
        lines.push(CheckLine::new(
            format!("{tag}_{}_kernel_concentration", letter(tag)),
            failure,
        ));
    }

    lines.push(CheckLine::from_result(
        "parseval_gaussian",
        parseval_gaussian(),
    ));
    lines
}

/// Relative Parseval mismatch of a Gaussian-windowed complex plane wave.
pub fn parseval_relative_error() -> Result<f64> {
    let p = 1.0;
    let x = gaussian_windowed(&make_phi_c(p, 0.0), 3.0, 40.0, 2048)?;
    let (a, b) = kernel(WaveTag::C);
    let ps = linspace(p - 8.0, p + 8.0, 2048);
    let g = generalized_ft(&x, &a, &b, &ps, Direction::Forward)?;
    let (lhs, rhs) = parseval_check(&x, &g)?;
    Ok((lhs - rhs).abs() / lhs)
}

fn parseval_gaussian() -> Result<Option<String>> {
    Ok(within(
        parseval_relative_error()?,
        1e-6,
        "relative mismatch",
    ))
}

fn spin() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    for r in 1..=3 {
        for sign in [1i8, -1] {
            let name = format!("spin[{r},{}]", if sign > 0 { '+' } else { '-' });
            lines.push(CheckLine::from_result(
                name,
                spin_eigen_check(r, sign).map(|_| None),
            ));
        }
    }
    lines
}

fn lorentz() -> Vec<CheckLine> {
    let mut lines = Vec::new();
    for v in [0.0, 0.5, -0.5, 0.9, -0.9, 0.99, -0.99] {
        let result = (|| -> Result<Option<String>> {
            let prod = boost(v)?.mul(&boost(-v)?);
            let dev = (prod - nalgebra::Matrix2::identity()).abs().max();
            Ok(within(dev, 1e-12, "deviation from identity"))
        })();
        lines.push(CheckLine::from_result(
            format!("boost_inverse[{v}]"),
            result,
        ));
    }

    let speeds = linspace(-0.9, 0.9, 13);
    let closure = (|| -> Result<Option<String>> {
        let mut worst: f64 = 0.0;
        for &v1 in &speeds {
            for &v2 in &speeds {
                let composed = boost(v1)?.mul(&boost(v2)?);
                let direct = *boost(compose_velocities(v1, v2))?.matrix();
                worst = worst.max((composed - direct).abs().max());
            }
        }
        Ok(within(worst, 1e-10, "max deviation"))
    })();
    lines.push(CheckLine::from_result("velocity_addition", closure));

    let invariance = (|| -> Result<Option<String>> {
        let a = FourVector::contravariant([1.3, 0.4, -0.2, 0.7]);
        let b = FourVector::contravariant([-0.5, 2.0, 0.3, 0.1]);
        let mut worst: f64 = 0.0;
        for &v in &speeds {
            let bv = boost(v)?;
            worst = worst
                .max((minkowski_dot(&bv.apply(&a), &bv.apply(&b)) - minkowski_dot(&a, &b)).abs());
        }
        Ok(within(worst, 1e-10, "max change of the invariant"))
    })();
    lines.push(CheckLine::from_result("minkowski_invariance", invariance));

    let kg = [
        ([0.0, 0.0, 0.0], 1.0, 1.0),
        ([3.0, 0.0, 0.0], 5.0, 4.0),
        ([3.0, 0.0, 0.0], -5.0, 4.0),
    ]
    .iter()
    .map(|&(p, e, m)| kg_dispersion_residual(p, e, m))
    .fold(0.0, f64::max);
    lines.push(CheckLine::new(
        "kg_dispersion",
        within(kg, 1e-12, "residual"),
    ));
    lines
}
