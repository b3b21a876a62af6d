//! The universal value type and the `a+bi` literal syntax.

use crate::error::{Error, Result};

/// Complex double — the universal type for `z`, `s`, `a`, and results.
pub type ComplexScalar = num_complex::Complex64;

/// Builds a [`ComplexScalar`], shorthand for tests and internal constants.
#[inline]
pub fn cplx(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

/// Rejects NaN/Inf components at API boundaries.
pub fn ensure_finite(v: ComplexScalar, name: &str) -> Result<()> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "{name} must have finite components, got {v}"
        )))
    }
}

/// Recognises an exact non-negative integer stored in a complex double.
///
/// Returns `Some(k)` when `v = k` exactly with zero imaginary part and
/// `k` small enough for exact `f64` representation.
pub fn as_integer(v: ComplexScalar) -> Option<i64> {
    if v.im != 0.0 {
        return None;
    }
    let r = v.re;
    if !r.is_finite() || r.fract() != 0.0 || r.abs() > 9.0e15 {
        return None;
    }
    Some(r as i64)
}

/// Recognises a positive integer (`1, 2, 3, ...`) stored in a complex double.
pub fn as_positive_integer(v: ComplexScalar) -> Option<u32> {
    match as_integer(v) {
        Some(k) if (1..=i64::from(u32::MAX)).contains(&k) => Some(k as u32),
        _ => None,
    }
}

/// Parses the CLI literal syntax: `"re"` or `"re±imi"` (e.g. `"10+1i"`,
/// `"2"`, `"-1.5"`, `"3.0-0.25i"`, `"1e3+2.5e-2i"`).
pub fn parse_complex(text: &str) -> Result<ComplexScalar> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Usage("empty complex literal".into()));
    }
    let parse_real = |s: &str, what: &str| -> Result<f64> {
        s.trim().parse::<f64>().map_err(|_| {
            Error::Usage(format!("cannot parse '{s}' as the {what} part of '{t}'"))
        })
    };
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        // Split at the last '+'/'-' that is neither leading nor an exponent
        // sign (i.e. not directly after 'e'/'E').
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let b = bytes[idx];
            if (b == b'+' || b == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re = parse_real(&body[..idx], "real")?;
                let sign = if bytes[idx] == b'-' { -1.0 } else { 1.0 };
                let im_text = &body[idx + 1..];
                let im = if im_text.is_empty() {
                    1.0
                } else {
                    parse_real(im_text, "imaginary")?
                };
                Ok(cplx(re, sign * im))
            }
            None => {
                // Pure imaginary: "2i", "-3.5i", "i".
                let im = match body {
                    "" | "+" => 1.0,
                    "-" => -1.0,
                    other => parse_real(other, "imaginary")?,
                };
                Ok(cplx(0.0, im))
            }
        }
    } else {
        Ok(cplx(parse_real(t, "real")?, 0.0))
    }
}

/// Formats a value in the same `a+bi` literal syntax `parse_complex` accepts,
/// using shortest round-trip digits. Purely real values print as plain reals.
pub fn format_complex(v: ComplexScalar) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im < 0.0 {
        format!("{}-{}i", v.re, -v.im)
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_real_literals() {
        assert_eq!(parse_complex("2").unwrap(), cplx(2.0, 0.0));
        assert_eq!(parse_complex("-1.5").unwrap(), cplx(-1.5, 0.0));
        assert_eq!(parse_complex("1e3").unwrap(), cplx(1000.0, 0.0));
        assert_eq!(parse_complex(" 0.25 ").unwrap(), cplx(0.25, 0.0));
    }

    #[test]
    fn parses_complex_literals() {
        assert_eq!(parse_complex("10+1i").unwrap(), cplx(10.0, 1.0));
        assert_eq!(parse_complex("3.0-0.25i").unwrap(), cplx(3.0, -0.25));
        assert_eq!(parse_complex("1e3+2.5e-2i").unwrap(), cplx(1000.0, 0.025));
        assert_eq!(parse_complex("-2-3i").unwrap(), cplx(-2.0, -3.0));
        assert_eq!(parse_complex("5+i").unwrap(), cplx(5.0, 1.0));
        assert_eq!(parse_complex("2i").unwrap(), cplx(0.0, 2.0));
        assert_eq!(parse_complex("-1.5E-3+4i").unwrap(), cplx(-0.0015, 4.0));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_complex("").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("1 + 2").is_err());
    }

    #[test]
    fn format_round_trips() {
        for v in [
            cplx(10.0, 1.0),
            cplx(-2.0, -3.0),
            cplx(0.1, 0.2),
            cplx(6.666666666666667, 0.0),
            cplx(0.0, -1.0),
            cplx(1.0e-20, 2.0e300),
        ] {
            let text = format_complex(v);
            assert_eq!(parse_complex(&text).unwrap(), v, "round-trip of {text}");
        }
    }

    #[test]
    fn integer_recognition() {
        assert_eq!(as_positive_integer(cplx(5.0, 0.0)), Some(5));
        assert_eq!(as_positive_integer(cplx(5.5, 0.0)), None);
        assert_eq!(as_positive_integer(cplx(5.0, 1.0)), None);
        assert_eq!(as_positive_integer(cplx(0.0, 0.0)), None);
        assert_eq!(as_positive_integer(cplx(-3.0, 0.0)), None);
        assert_eq!(as_integer(cplx(-3.0, 0.0)), Some(-3));
    }

    #[test]
    fn finite_gate() {
        assert!(ensure_finite(cplx(1.0, 2.0), "z").is_ok());
        assert!(ensure_finite(cplx(f64::NAN, 0.0), "z").is_err());
        assert!(ensure_finite(cplx(0.0, f64::INFINITY), "z").is_err());
    }
}
