//! Deterministic text rendering shared by the CLI and the C bindings.
//!
//! Reals print with six significant digits and trailing zeros trimmed;
//! exact integers print without a decimal point. Magnitudes below
//! [`DISPLAY_ZERO`] print as `0`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gates::Gate;
use crate::linalg::{ComplexMatrix, C64};

/// Values smaller than this in magnitude are displayed as zero.
pub const DISPLAY_ZERO: f64 = 1e-12;

pub fn real(x: f64) -> String {
    let x = if x.abs() < DISPLAY_ZERO { 0.0 } else { x };
    if x.fract() == 0.0 && x.abs() < 1e15 {
        return format!("{}", x as i64);
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&exp) {
        let s = format!("{x:.5e}");
        let (mantissa, e) = s.split_once('e').expect("exponent form");
        return format!("{}e{e}", trim_zeros(mantissa));
    }
    let decimals = (5 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `re+imi` / `re-imi`.
pub fn complex(z: C64) -> String {
    let im = if z.im.abs() < DISPLAY_ZERO { 0.0 } else { z.im };
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{}{sign}{}i", real(z.re), real(im.abs()))
}

/// One matrix row per line, entries separated by single spaces.
pub fn matrix(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|&z| complex(z)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Rows `a b -> a' b'` in lexicographic input order.
pub fn gate_table(gate: &Gate) -> Result<String> {
    let table = gate.table()?;
    let mut out = String::new();
    for (i, w) in gate.shape().words().enumerate() {
        writeln!(out, "{w} -> {}", table.row(i)).expect("write to string");
    }
    Ok(out)
}

pub fn amplitudes(values: &[C64]) -> String {
    values.iter().map(|&z| complex(z)).collect::<Vec<_>>().join(" ")
}

/// Parses `1`, `-0.5`, `0.5+0.5i`, `2i`, `-i`, `1e-3-2e-1i`.
pub fn parse_complex(s: &str) -> Result<C64> {
    let bad = || Error::InvalidArgument(format!("cannot parse complex number `{s}`"));
    let t = s.trim();
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    };
    // split before the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split =
        (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    let im = im.parse::<f64>().map_err(|_| bad())?;
    Ok(C64::new(re, im))
}
