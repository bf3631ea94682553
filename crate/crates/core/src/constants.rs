//! Physical constants.

use std::f64::consts::PI;

/// Speed of light in vacuum, m/s.
pub const C0: f64 = 299_792_458.0;

/// Vacuum permeability, H/m.
pub const MU0: f64 = 4.0e-7 * PI;

/// Vacuum permittivity, F/m.
pub const EPS0: f64 = 1.0 / (MU0 * C0 * C0);

/// Impedance of free space, Ω.
pub const ETA0: f64 = MU0 * C0;

/// Decibels per neper, `20·log10(e)`.
pub const DB_PER_NEPER: f64 = 8.685_889_638_065_037;

/// Converts an attenuation in Np to dB.
pub fn np_to_db(np: f64) -> f64 {
    np * DB_PER_NEPER
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta0_value() {
        assert!((ETA0 - 376.730_313_4).abs() < 1e-6);
    }

    #[test]
    fn db_per_neper_matches_log() {
        assert!((DB_PER_NEPER - 20.0 * std::f64::consts::E.log10()).abs() < 1e-12);
    }

    #[test]
    fn light_speed_from_mu_eps() {
        assert!(((MU0 * EPS0).sqrt().recip() - C0).abs() < 1e-6);
    }
}
