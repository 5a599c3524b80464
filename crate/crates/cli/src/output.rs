//! Deterministic numeric formatting and output-sink selection.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

/// Formats with 9 significant digits, `.` decimal separator, `nan` for NaN.
/// Exponent notation only outside a sane plotting range, so CSV consumers
/// see plain decimals.
pub fn fmt9(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..=12).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.8e}")
    }
}

/// Stdout or a file, per `--out`.
pub fn open_sink(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}
