//! Locale-independent float formatting for CSV and report output.

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros removed,
/// scientific notation with a lowercase `e` and two-digit exponent outside
/// `[1e-4, 1e17)`. Negative zero prints as `0`.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    } else {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::fmt_float;

    #[test]
    fn matches_percent_17g() {
        assert_eq!(fmt_float(0.0), "0");
        assert_eq!(fmt_float(-0.0), "0");
        assert_eq!(fmt_float(1.0), "1");
        assert_eq!(fmt_float(-2.5), "-2.5");
        assert_eq!(fmt_float(0.1), "0.10000000000000001");
        assert_eq!(fmt_float(1e-5), "1.0000000000000001e-05");
        assert_eq!(fmt_float(6.123233995736766e-17), "6.123233995736766e-17");
        assert_eq!(fmt_float(123456.0), "123456");
        assert_eq!(fmt_float(1e20), "1e+20");
        assert_eq!(fmt_float(std::f64::consts::PI), "3.1415926535897931");
    }

    #[test]
    fn round_trips_exactly() {
        for x in [0.1, 1.0 / 3.0, -7.25e-9, 2.0f64.sqrt() * 1e12, 1e-300] {
            assert_eq!(fmt_float(x).parse::<f64>().unwrap(), x);
        }
    }
}
