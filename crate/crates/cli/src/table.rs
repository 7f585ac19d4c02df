// SPDX-License-Identifier: MIT OR Apache-2.0

//! CSV export of local-time profiles.

use std::io::Write;
use std::path::Path;

use fvlocal::LocalTimeProfile;

use crate::error::{CliError, Result};

pub const HEADER: [&str; 5] = ["x_left", "x_right", "ell", "lambda", "N"];

/// 17 significant digits, trailing zeros dropped: `1`, `0.5`,
/// `0.10000000000000001`.
pub fn format_float(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let s = format!("{v:.16e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = digits.chars().filter(|&c| c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{digits}", "0".repeat((-point) as usize))
    } else if point as usize >= digits.len() {
        format!("{digits}{}", "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

pub fn write_profile<W: Write>(profile: &LocalTimeProfile, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for cell in profile.cells() {
        w.write_record([
            format_float(cell.lower),
            format_float(cell.upper),
            cell.times.signed.to_string(),
            cell.times.absolute.to_string(),
            cell.times.crossings.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_profile_file(profile: &LocalTimeProfile, file: &Path) -> Result<()> {
    let f = std::fs::File::create(file).map_err(|e| CliError::io(file, e))?;
    write_profile(profile, f).map_err(|source| CliError::Csv {
        path: file.to_path_buf(),
        source,
    })
}
