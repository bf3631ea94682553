//! Distributed-parameter line model, propagation constant and characteristic
//! impedance, distortionless design, and geometry-based `Z0` formulas.

use std::f64::consts::PI;

use crate::constants::ETA0;
use crate::error::{invalid, Error, Result};
use crate::Complex;

/// Per-unit-length series and shunt parameters of a uniform line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineModel {
    /// Series resistance, Ω/m.
    pub r_per_m: f64,
    /// Series inductance, H/m.
    pub l_per_m: f64,
    /// Shunt conductance, S/m.
    pub g_per_m: f64,
    /// Shunt capacitance, F/m.
    pub c_per_m: f64,
}

impl LineModel {
    /// Builds a validated model. All parameters must be finite, non-negative
    /// and not all zero.
    pub fn new(r_per_m: f64, l_per_m: f64, g_per_m: f64, c_per_m: f64) -> Result<Self> {
        let m = Self { r_per_m, l_per_m, g_per_m, c_per_m };
        m.validate()?;
        Ok(m)
    }

    /// A lossless line with the given inductance and capacitance.
    pub fn lossless(l_per_m: f64, c_per_m: f64) -> Result<Self> {
        Self::new(0.0, l_per_m, 0.0, c_per_m)
    }

    fn validate(&self) -> Result<()> {
        let p = [self.r_per_m, self.l_per_m, self.g_per_m, self.c_per_m];
        if p.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(invalid("line parameters must be finite and non-negative"));
        }
        if p.iter().all(|v| *v == 0.0) {
            return Err(invalid("line parameters are all zero"));
        }
        Ok(())
    }

    /// Series impedance per metre, `R + jωL`.
    pub fn series_impedance(&self, f: f64) -> Complex {
        Complex::new(self.r_per_m, 2.0 * PI * f * self.l_per_m)
    }

    /// Shunt admittance per metre, `G + jωC`.
    pub fn shunt_admittance(&self, f: f64) -> Complex {
        Complex::new(self.g_per_m, 2.0 * PI * f * self.c_per_m)
    }
}

/// Propagation constant `γ = α + jβ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationConstant {
    /// Attenuation, Np/m.
    pub alpha: f64,
    /// Phase constant, rad/m.
    pub beta: f64,
}

impl PropagationConstant {
    /// A lossless line with phase constant `beta`.
    pub fn lossless(beta: f64) -> Self {
        Self { alpha: 0.0, beta }
    }

    /// `γ` as a complex number.
    pub fn gamma(&self) -> Complex {
        Complex::new(self.alpha, self.beta)
    }

    /// Wavelength `2π/β`, m.
    pub fn wavelength(&self) -> f64 {
        2.0 * PI / self.beta
    }

    /// Phase velocity `ω/β` at frequency `f`, m/s.
    pub fn phase_velocity(&self, f: f64) -> f64 {
        2.0 * PI * f / self.beta
    }
}

/// Propagation constant and characteristic impedance of `line` at `f`.
///
/// Uses the principal square root so that `α ≥ 0` and `Re Z0 > 0`.
pub fn secondary_constants(line: &LineModel, f: f64) -> Result<(PropagationConstant, Complex)> {
    line.validate()?;
    if !(f > 0.0) || !f.is_finite() {
        return Err(invalid("frequency must be positive"));
    }
    if line.g_per_m == 0.0 && line.c_per_m == 0.0 {
        return Err(Error::ZeroAdmittance);
    }
    let z = line.series_impedance(f);
    let y = line.shunt_admittance(f);
    let gamma = (z * y).sqrt();
    let z0 = (z / y).sqrt();
    Ok((PropagationConstant { alpha: gamma.re, beta: gamma.im }, z0))
}

/// Distortionless line (`R/G = L/C`) with attenuation `alpha`, phase
/// velocity `v_p` and characteristic impedance `z0`.
pub fn solve_distortionless(alpha: f64, v_p: f64, z0: f64) -> Result<LineModel> {
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(invalid("attenuation must be finite and non-negative"));
    }
    if !(v_p > 0.0) || !(z0 > 0.0) || !v_p.is_finite() || !z0.is_finite() {
        return Err(invalid("phase velocity and impedance must be positive"));
    }
    LineModel::new(alpha * z0, z0 / v_p, alpha / z0, 1.0 / (z0 * v_p))
}

/// Cross-section of a TEM line with a closed-form characteristic impedance.
///
/// Lengths are in metres. `eps_r` and `mu_r` are relative constants of the
/// filling dielectric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LineGeometry {
    /// Inner radius `a`, outer radius `b`.
    Coaxial { a: f64, b: f64, eps_r: f64 },
    /// Two wires of radius `a` at centre spacing `d`.
    Bifilar { d: f64, a: f64, eps_r: f64, mu_r: f64 },
    /// Plates of width `w` separated by `b`, valid for `w ≫ b`.
    ParallelPlates { b: f64, w: f64, eps_r: f64, mu_r: f64 },
    /// Coplanar strips of width `w` at spacing `d`, valid for `d ≫ w`.
    CollinearPlates { d: f64, w: f64, eps_r: f64, mu_r: f64 },
    /// Wire of diameter `d` at height `h` above a ground plane, valid for `h ≫ d`.
    WireOverPlane { h: f64, d: f64, eps_r: f64, mu_r: f64 },
    /// Pair of wires of diameter `d` at spacing `s` inside a shield of
    /// diameter `shield_d`.
    ShieldedPair { s: f64, d: f64, shield_d: f64, eps_r: f64, mu_r: f64 },
    /// Wire of diameter `d` at depth `h` in a trough of width `w`.
    WireInTrough { w: f64, h: f64, d: f64, eps_r: f64, mu_r: f64 },
    /// Confocal elliptic conductors with semi-axes `a` (inner) and `b`
    /// (outer) and half focal distance `c`.
    EllipticFocal { a: f64, b: f64, c: f64, eps_r: f64, mu_r: f64 },
    /// Strip of width `w` and thickness `thickness` on a substrate of
    /// height `h`.
    Microstrip { w: f64, h: f64, thickness: f64, eps_r: f64 },
}

fn medium_eta(eps_r: f64, mu_r: f64) -> Result<f64> {
    if !(eps_r > 0.0) || !(mu_r > 0.0) || !eps_r.is_finite() || !mu_r.is_finite() {
        return Err(Error::InvalidGeometry("relative constants must be positive".into()));
    }
    Ok(ETA0 * (mu_r / eps_r).sqrt())
}

fn positive(values: &[f64]) -> Result<()> {
    if values.iter().any(|v| !(*v > 0.0) || !v.is_finite()) {
        return Err(Error::InvalidGeometry("lengths must be positive".into()));
    }
    Ok(())
}

fn log_arg(x: f64, what: &str) -> Result<f64> {
    if x > 1.0 {
        Ok(x.ln())
    } else {
        Err(Error::InvalidGeometry(format!("{what}: logarithm argument must exceed 1")))
    }
}

/// Effective width of a microstrip of finite thickness.
fn microstrip_effective_width(w: f64, h: f64, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(w);
    }
    let x = if w > h / (2.0 * PI) {
        h
    } else if 2.0 * t < w {
        2.0 * PI * w
    } else {
        return Err(Error::InvalidGeometry(
            "microstrip width outside the thickness-correction ranges".into(),
        ));
    };
    Ok(w + t / PI * (1.0 + (2.0 * x / t).ln()))
}

/// Effective permittivity and characteristic impedance of a microstrip.
pub fn microstrip(w: f64, h: f64, thickness: f64, eps_r: f64) -> Result<(f64, f64)> {
    positive(&[w, h, eps_r])?;
    if !(thickness >= 0.0) || !thickness.is_finite() {
        return Err(Error::InvalidGeometry("thickness must be non-negative".into()));
    }
    let we = microstrip_effective_width(w, h, thickness)?;
    let u = we / h;
    let base = 0.5 * (eps_r + 1.0);
    let half = 0.5 * (eps_r - 1.0);
    let fill = (1.0 + 12.0 / u).powf(-0.5);
    if u >= 1.0 {
        let eps_e = base + half * fill;
        let z0 = ETA0 / eps_e.sqrt() / (u + 1.393 + 0.667 * (u + 1.444).ln());
        Ok((eps_e, z0))
    } else {
        let eps_e = base + half * (fill + 0.04 * (1.0 - u).powi(2));
        let z0 = ETA0 / (2.0 * PI) / eps_e.sqrt() * (8.0 / u + u / 4.0).ln();
        Ok((eps_e, z0))
    }
}

/// Characteristic impedance of a lossless TEM line from its cross-section.
pub fn geometric_z0(geom: &LineGeometry) -> Result<f64> {
    use LineGeometry::*;
    let z = match *geom {
        Coaxial { a, b, eps_r } => {
            positive(&[a, b])?;
            if b <= a {
                return Err(Error::InvalidGeometry("coaxial line needs b > a".into()));
            }
            medium_eta(eps_r, 1.0)? / (2.0 * PI) * (b / a).ln()
        }
        Bifilar { d, a, eps_r, mu_r } => {
            positive(&[d, a])?;
            medium_eta(eps_r, mu_r)? / PI * log_arg(d / a, "bifilar")?
        }
        ParallelPlates { b, w, eps_r, mu_r } => {
            positive(&[b, w])?;
            medium_eta(eps_r, mu_r)? * b / w
        }
        CollinearPlates { d, w, eps_r, mu_r } => {
            positive(&[d, w])?;
            medium_eta(eps_r, mu_r)? / PI * log_arg(4.0 * d / w, "collinear plates")?
        }
        WireOverPlane { h, d, eps_r, mu_r } => {
            positive(&[h, d])?;
            if h <= d / 2.0 {
                return Err(Error::InvalidGeometry("wire intersects the plane".into()));
            }
            medium_eta(eps_r, mu_r)? / (2.0 * PI) * log_arg(4.0 * h / d, "wire over plane")?
        }
        ShieldedPair { s, d, shield_d, eps_r, mu_r } => {
            positive(&[s, d, shield_d])?;
            if shield_d <= s {
                return Err(Error::InvalidGeometry("shield must enclose the pair".into()));
            }
            let d2 = shield_d * shield_d;
            let s2 = s * s;
            let arg = 2.0 * s / d * (d2 - s2) / (d2 + s2);
            medium_eta(eps_r, mu_r)? / (2.0 * PI) * log_arg(arg, "shielded pair")?
        }
        WireInTrough { w, h, d, eps_r, mu_r } => {
            positive(&[w, h, d])?;
            let arg = 4.0 * w / (PI * d) * (PI * h / w).tanh();
            medium_eta(eps_r, mu_r)? / (2.0 * PI) * log_arg(arg, "wire in trough")?
        }
        EllipticFocal { a, b, c, eps_r, mu_r } => {
            positive(&[a, b])?;
            if !(c >= 0.0) || c > a || b <= a {
                return Err(Error::InvalidGeometry("elliptic line needs c ≤ a < b".into()));
            }
            let num = b + (b * b - c * c).sqrt();
            let den = a + (a * a - c * c).sqrt();
            medium_eta(eps_r, mu_r)? / (2.0 * PI) * (num / den).ln()
        }
        Microstrip { w, h, thickness, eps_r } => microstrip(w, h, thickness, eps_r)?.1,
    };
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lossless_model_has_real_z0() {
        let line = LineModel::lossless(166.667e-9, 66.667e-12).unwrap();
        let (g, z0) = secondary_constants(&line, 1e6).unwrap();
        assert_eq!(g.alpha, 0.0);
        assert_relative_eq!(z0.re, 50.0, max_relative = 1e-5);
        assert_eq!(z0.im, 0.0);
        let w = 2.0 * PI * 1e6;
        assert_relative_eq!(g.beta, w * (166.667e-9f64 * 66.667e-12).sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn zero_admittance_rejected() {
        let line = LineModel::new(1.0, 1e-7, 0.0, 0.0).unwrap();
        assert_eq!(secondary_constants(&line, 1e6), Err(Error::ZeroAdmittance));
    }

    #[test]
    fn negative_parameter_rejected() {
        assert!(LineModel::new(-1.0, 1e-7, 0.0, 1e-10).is_err());
        assert!(LineModel::new(0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn lossy_example() {
        let line = LineModel::new(100.0, 80e-9, 1.6, 200e-12).unwrap();
        let (g, z0) = secondary_constants(&line, 2e9).unwrap();
        assert_relative_eq!(g.alpha, 17.94, max_relative = 5e-3);
        assert_relative_eq!(g.beta, 51.85, max_relative = 5e-3);
        assert_relative_eq!(z0.re, 17.9, max_relative = 5e-3);
        assert!((z0.im - 4.3).abs() < 0.1);
    }

    #[test]
    fn distortionless_lossless_limit() {
        let m = solve_distortionless(0.0, 2e8, 75.0).unwrap();
        assert_eq!(m.r_per_m, 0.0);
        assert_eq!(m.g_per_m, 0.0);
        assert_eq!(m.l_per_m, 75.0 / 2e8);
        assert_eq!(m.c_per_m, 1.0 / (75.0 * 2e8));
    }

    #[test]
    fn distortionless_rejects_bad_inputs() {
        assert!(solve_distortionless(-1.0, 2e8, 50.0).is_err());
        assert!(solve_distortionless(0.1, 0.0, 50.0).is_err());
        assert!(solve_distortionless(0.1, 2e8, 0.0).is_err());
    }

    #[test]
    fn coax_log_forms_agree() {
        let z = geometric_z0(&LineGeometry::Coaxial { a: 1e-3, b: 3.5e-3, eps_r: 2.25 }).unwrap();
        let z10 = ETA0 / (2.0 * PI) / 1.5 * std::f64::consts::LN_10 * 3.5f64.log10();
        assert_relative_eq!(z, z10, max_relative = 1e-12);
    }

    #[test]
    fn coax_unit_log_is_near_sixty() {
        let z = geometric_z0(&LineGeometry::Coaxial { a: 1.0, b: std::f64::consts::E, eps_r: 1.0 })
            .unwrap();
        assert_relative_eq!(z, 60.0, max_relative = 5e-3);
    }

    #[test]
    fn bifilar_unit_log() {
        let a = 1e-3;
        let z = geometric_z0(&LineGeometry::Bifilar { d: a * std::f64::consts::E, a, eps_r: 1.0, mu_r: 1.0 })
            .unwrap();
        assert_relative_eq!(z, ETA0 / PI, max_relative = 1e-12);
        assert_relative_eq!(z, 120.0, max_relative = 5e-3);
    }

    #[test]
    fn coax_requires_b_greater_than_a() {
        let r = geometric_z0(&LineGeometry::Coaxial { a: 2.0, b: 1.0, eps_r: 1.0 });
        assert!(matches!(r, Err(Error::InvalidGeometry(_))));
    }

    #[test]
    fn microstrip_thin_and_thick_branches() {
        let (_, z_wide) = microstrip(2e-3, 1e-3, 0.0, 4.0).unwrap();
        let (_, z_narrow) = microstrip(0.5e-3, 1e-3, 0.0, 4.0).unwrap();
        assert!(z_narrow > z_wide);
        let (_, z_thick) = microstrip(2e-3, 1e-3, 35e-6, 4.0).unwrap();
        assert!(z_thick < z_wide);
        let r = microstrip(1e-5, 1e-3, 1e-5, 4.0);
        assert!(matches!(r, Err(Error::InvalidGeometry(_))));
    }

    #[test]
    fn elliptic_reduces_to_coax_for_zero_focus() {
        let e = geometric_z0(&LineGeometry::EllipticFocal { a: 1e-3, b: 4e-3, c: 0.0, eps_r: 2.0, mu_r: 1.0 })
            .unwrap();
        let c = geometric_z0(&LineGeometry::Coaxial { a: 1e-3, b: 4e-3, eps_r: 2.0 }).unwrap();
        assert_relative_eq!(e, c, max_relative = 1e-12);
    }

    #[test]
    fn simple_geometries_positive() {
        use LineGeometry::*;
        let cases = [
            ParallelPlates { b: 1e-3, w: 2e-2, eps_r: 2.0, mu_r: 1.0 },
            CollinearPlates { d: 1e-2, w: 1e-3, eps_r: 1.0, mu_r: 1.0 },
            WireOverPlane { h: 1e-2, d: 1e-3, eps_r: 1.0, mu_r: 1.0 },
            ShieldedPair { s: 5e-3, d: 5e-4, shield_d: 2e-2, eps_r: 1.0, mu_r: 1.0 },
            WireInTrough { w: 2e-2, h: 1e-2, d: 1e-3, eps_r: 1.0, mu_r: 1.0 },
        ];
        for g in cases {
            assert!(geometric_z0(&g).unwrap() > 0.0, "{g:?}");
        }
    }
}
