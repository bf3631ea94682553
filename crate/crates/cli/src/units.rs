//! Unit-suffixed quantities and complex literals.

use emwave::Complex;

/// Physical dimension expected for an argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim {
    Frequency,
    Length,
    Resistance,
    Conductance,
    Ratio,
    Angle,
    /// Plain SI number; no suffix accepted.
    Plain,
}

/// Whitelisted suffixes with their dimension and SI scale.
pub const UNITS: [(&str, Dim, f64); 13] = [
    ("Hz", Dim::Frequency, 1.0),
    ("kHz", Dim::Frequency, 1e3),
    ("MHz", Dim::Frequency, 1e6),
    ("GHz", Dim::Frequency, 1e9),
    ("m", Dim::Length, 1.0),
    ("cm", Dim::Length, 1e-2),
    ("mm", Dim::Length, 1e-3),
    ("um", Dim::Length, 1e-6),
    ("ohm", Dim::Resistance, 1.0),
    ("S", Dim::Conductance, 1.0),
    ("dB", Dim::Ratio, 1.0),
    ("deg", Dim::Angle, std::f64::consts::PI / 180.0),
    ("rad", Dim::Angle, 1.0),
];

fn split_suffix(s: &str) -> (&str, &str) {
    let cut = s
        .char_indices()
        .rev()
        .take_while(|(_, c)| c.is_ascii_alphabetic())
        .last()
        .map_or(s.len(), |(i, _)| i);
    s.split_at(cut)
}

fn number(s: &str) -> Result<f64, String> {
    s.trim().parse::<f64>().map_err(|_| format!("'{s}' is not a number"))
}

/// Parses `value[suffix]` into SI units, checking the suffix against `dim`.
pub fn parse_quantity(s: &str, dim: Dim) -> Result<f64, String> {
    let s = s.trim();
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    let (num, suffix) = split_suffix(s);
    let Some(&(_, unit_dim, scale)) = UNITS.iter().find(|(u, _, _)| *u == suffix) else {
        return Err(format!("unknown unit '{suffix}' in '{s}'"));
    };
    if unit_dim != dim {
        return Err(format!("unit '{suffix}' does not fit this argument"));
    }
    Ok(number(num)? * scale)
}

/// Parses `a`, `bj`, `a+bj` or `a-bj`, optionally followed by `ohm`.
pub fn parse_complex(s: &str) -> Result<Complex, String> {
    let t = s.trim();
    let t = t.strip_suffix("ohm").unwrap_or(t).trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let Some(body) = t.strip_suffix('j') else {
        return Ok(Complex::new(number(t).map_err(|_| format!("'{s}' is not a complex number"))?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => number(x).map_err(|_| format!("'{s}' is not a complex number"))?,
    };
    let re = number(re).map_err(|_| format!("'{s}' is not a complex number"))?;
    Ok(Complex::new(re, im))
}
