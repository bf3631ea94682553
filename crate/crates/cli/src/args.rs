//! Value parsers shared by the subcommands.

use emwave::guides::{ModeFamily, ModeId};
use emwave::linestate::Termination;
use emwave::Complex;

use crate::units::{parse_complex, parse_quantity, Dim};

pub fn freq(s: &str) -> Result<f64, String> {
    parse_quantity(s, Dim::Frequency)
}

pub fn length(s: &str) -> Result<f64, String> {
    parse_quantity(s, Dim::Length)
}

pub fn ohms(s: &str) -> Result<f64, String> {
    parse_quantity(s, Dim::Resistance)
}

pub fn siemens(s: &str) -> Result<f64, String> {
    parse_quantity(s, Dim::Conductance)
}

pub fn angle(s: &str) -> Result<f64, String> {
    parse_quantity(s, Dim::Angle)
}

/// Attenuation in Np/m, or in dB/m with a `dB` suffix.
pub fn attenuation(s: &str) -> Result<f64, String> {
    let v = parse_quantity(s, Dim::Ratio)?;
    Ok(if s.trim().ends_with("dB") { v / emwave::constants::DB_PER_NEPER } else { v })
}

pub fn plain(s: &str) -> Result<f64, String> {
    parse_quantity(s, Dim::Plain)
}

pub fn complex(s: &str) -> Result<Complex, String> {
    parse_complex(s)
}

/// `short`, `open` or a complex impedance.
pub fn termination(s: &str) -> Result<Termination, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "short" => Ok(Termination::Short),
        "open" => Ok(Termination::Open),
        _ => parse_complex(s).map(Termination::Load),
    }
}

/// `TEM`, `TEmn` or `TMmn`; a single index `TE1` means `m = 1, n = 0`.
pub fn mode(s: &str) -> Result<ModeId, String> {
    let u = s.trim().to_ascii_uppercase();
    if u == "TEM" {
        return Ok(ModeId::tem());
    }
    let (family, digits) = if let Some(d) = u.strip_prefix("TE") {
        (ModeFamily::TE, d)
    } else if let Some(d) = u.strip_prefix("TM") {
        (ModeFamily::TM, d)
    } else {
        return Err(format!("'{s}' is not a mode name"));
    };
    let idx = |d: &str| d.parse::<u32>().map_err(|_| format!("'{s}' is not a mode name"));
    let (m, n) = match digits.len() {
        1 => (idx(digits)?, 0),
        2 => (idx(&digits[..1])?, idx(&digits[1..])?),
        _ => match digits.split_once(',') {
            Some((a, b)) => (idx(a)?, idx(b)?),
            None => return Err(format!("'{s}': write indices as TEmn or TEm,n")),
        },
    };
    Ok(ModeId { family, m, n })
}

/// Display label of a termination for the normalized inputs.
pub fn termination_json(t: Termination) -> serde_json::Value {
    match t {
        Termination::Short => "short".into(),
        Termination::Open => "open".into(),
        Termination::Load(z) => crate::output::cx(z),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes() {
        assert_eq!(mode("te10").unwrap(), ModeId::te(1, 0));
        assert_eq!(mode("TM11").unwrap(), ModeId::tm(1, 1));
        assert_eq!(mode("TEM").unwrap(), ModeId::tem());
        assert_eq!(mode("TE1").unwrap(), ModeId::te(1, 0));
        assert_eq!(mode("TE12,3").unwrap(), ModeId::te(12, 3));
        assert!(mode("XX10").is_err());
    }

    #[test]
    fn terminations() {
        assert!((attenuation("8.685889638065037dB").unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(termination("Short").unwrap(), Termination::Short);
        assert_eq!(termination("50+25j").unwrap(), Termination::Load(Complex::new(50.0, 25.0)));
    }
}
