//! Output formatting: the three emission formats and the digit policies.
//!
//! Machine formats (`json`, `csv`) print floats with shortest round-trip
//! digits, so re-parsing recovers the exact double. Human format rounds to
//! 10 significant digits. Identical inputs must produce byte-identical
//! output, so every function here is deterministic.

use clap::ValueEnum;
use lerch_core::error::{Error, Result};
use lerch_core::ComplexScalar;
use std::path::Path;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// 10 significant digits, with context lines where available.
    Human,
    /// Machine-readable, round-trip float digits (the default).
    Json,
    /// Comma-separated with a header row, round-trip float digits.
    Csv,
}

/// Writes `text` to `out` (or standard output), normalised to end in exactly
/// one newline.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    let body = text.trim_end_matches('\n');
    match out {
        Some(path) => std::fs::write(path, format!("{body}\n"))
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{body}").and_then(|()| stdout.flush()) {
                Ok(()) => Ok(()),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {
                    // Downstream closed the pipe (`lerch table1 | head`);
                    // vanish quietly like any well-behaved filter.
                    std::process::exit(0);
                }
                Err(e) => Err(Error::Usage(format!("cannot write standard output: {e}"))),
            }
        }
    }
}

fn f64_json(x: f64) -> String {
    if x.is_finite() {
        serde_json::to_string(&x).expect("finite float serializes")
    } else {
        // JSON has no NaN/Inf literal; match the report convention.
        "null".into()
    }
}

/// A scalar result as a bare JSON value: a number when purely real, a
/// two-element `[re,im]` array otherwise.
pub fn scalar_json(v: ComplexScalar) -> String {
    if v.im == 0.0 {
        f64_json(v.re)
    } else {
        format!("[{},{}]", f64_json(v.re), f64_json(v.im))
    }
}

/// `x` rounded to at most 10 significant digits; positional notation for
/// moderate magnitudes, scientific otherwise, trailing zeros dropped.
pub fn sig10(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let rounded: f64 = format!("{x:.9e}").parse().expect("rounded float reparses");
    let mag = rounded.abs();
    if (1e-4..1e10).contains(&mag) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

/// The human-format counterpart of [`lerch_core::scalar::format_complex`].
pub fn sig10_complex(v: ComplexScalar) -> String {
    if v.im == 0.0 {
        sig10(v.re)
    } else if v.im < 0.0 {
        format!("{}-{}i", sig10(v.re), sig10(-v.im))
    } else {
        format!("{}+{}i", sig10(v.re), sig10(v.im))
    }
}

/// A header row plus data rows, RFC-4180 quoted, without the trailing
/// newline (the emitter adds it).
pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv header");
    for row in rows {
        w.write_record(row).expect("csv row");
    }
    let bytes = w.into_inner().expect("csv flush");
    let mut text = String::from_utf8(bytes).expect("csv utf8");
    while text.ends_with('\n') {
        text.pop();
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use lerch_core::scalar::cplx;

    #[test]
    fn sig10_rounds_and_picks_notation() {
        assert_eq!(sig10(20.0 / 3.0), "6.666666667");
        assert_eq!(sig10(1.35e-14), "1.35e-14");
        assert_eq!(sig10(-0.078696), "-0.078696");
        assert_eq!(sig10(602214.076), "602214.076");
        assert_eq!(sig10(0.0), "0");
        assert_eq!(sig10(1.23456789012e10), "1.23456789e10");
    }

    #[test]
    fn scalar_json_forms() {
        assert_eq!(scalar_json(cplx(20.0 / 3.0, 0.0)), "6.666666666666667");
        assert_eq!(scalar_json(cplx(1.5, -0.25)), "[1.5,-0.25]");
        assert_eq!(scalar_json(cplx(f64::NAN, 1.0)), "[null,1.0]");
    }

    #[test]
    fn csv_text_quotes_and_trims() {
        let text = csv_text(
            &["n", "note"],
            &[vec!["1".into(), "a, with comma".into()]],
        );
        assert_eq!(text, "n,note\n1,\"a, with comma\"");
    }
}
