//! Waveguides: rectangular TE/TM modes with power and losses, circular-guide
//! cutoffs from Bessel zeros, parallel-plate guides and coaxial lines.
//!
//! Dispersion uses the real parts `ε′` and `μ′` of the fill; its losses enter
//! only through the attenuation formulas.

use std::f64::consts::PI;

use crate::bessel::{bessel_root, table_entry};
use crate::constants::MU0;
use crate::error::{invalid, Error, Result};
use crate::planewave::Medium;
use crate::Complex;

/// Mode family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModeFamily {
    /// No longitudinal electric field.
    TE,
    /// No longitudinal magnetic field.
    TM,
    /// No longitudinal field at all; two-conductor guides only.
    TEM,
}

/// Mode label `family_mn`. Circular guides read `m` as the azimuthal index
/// and `n` as the radial index; parallel plates use `m` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeId {
    /// Family.
    pub family: ModeFamily,
    /// First index.
    pub m: u32,
    /// Second index.
    pub n: u32,
}

impl ModeId {
    /// `TE_mn`.
    pub fn te(m: u32, n: u32) -> Self {
        Self { family: ModeFamily::TE, m, n }
    }

    /// `TM_mn`.
    pub fn tm(m: u32, n: u32) -> Self {
        Self { family: ModeFamily::TM, m, n }
    }

    /// TEM.
    pub fn tem() -> Self {
        Self { family: ModeFamily::TEM, m: 0, n: 0 }
    }
}

impl std::fmt::Display for ModeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.family {
            ModeFamily::TEM => write!(f, "TEM"),
            fam => write!(f, "{fam:?}{}{}", self.m, self.n),
        }
    }
}

/// Hollow rectangular guide with broad wall `a` and narrow wall `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectGuide {
    /// Broad dimension, m.
    pub a: f64,
    /// Narrow dimension, m.
    pub b: f64,
    /// Filling medium.
    pub fill: Medium,
    /// Wall conductivity, S/m; `None` for perfectly conducting walls.
    pub wall_sigma: Option<f64>,
}

impl RectGuide {
    /// Validated guide with `a ≥ b > 0`.
    pub fn new(a: f64, b: f64, fill: Medium, wall_sigma: Option<f64>) -> Result<Self> {
        let g = Self { a, b, fill, wall_sigma };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        if !(self.b > 0.0) || !(self.a >= self.b) || !self.a.is_finite() {
            return Err(Error::InvalidGeometry("rectangular guide needs a ≥ b > 0".into()));
        }
        check_fill(&self.fill)?;
        check_wall(self.wall_sigma)
    }
}

fn check_fill(fill: &Medium) -> Result<()> {
    fill.validate()?;
    if fill.is_pec() {
        return Err(invalid("a guide cannot be filled with a perfect conductor"));
    }
    Ok(())
}

fn check_wall(sigma: Option<f64>) -> Result<()> {
    match sigma {
        Some(s) if !(s > 0.0) || s.is_nan() => Err(invalid("wall conductivity must be positive")),
        _ => Ok(()),
    }
}

fn check_frequency(f: f64) -> Result<()> {
    if !(f > 0.0) || !f.is_finite() {
        return Err(invalid("frequency must be positive"));
    }
    Ok(())
}

/// Propagation along the guide axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dispersion {
    /// Travelling mode with phase constant `beta`, rad/m.
    Propagating {
        /// Phase constant, rad/m.
        beta: f64,
    },
    /// Evanescent mode (or exactly at cutoff) with attenuation `alpha`, Np/m.
    Cutoff {
        /// Attenuation, Np/m.
        alpha: f64,
    },
}

/// Modal quantities at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeParams {
    /// Cutoff frequency, Hz.
    pub f_c: f64,
    /// Phase or attenuation constant.
    pub dispersion: Dispersion,
    /// Guide wavelength, m; infinite at or below cutoff.
    pub lambda_g: f64,
    /// Phase velocity, m/s; infinite at or below cutoff.
    pub v_p: f64,
    /// Group velocity, m/s; zero at or below cutoff.
    pub v_g: f64,
    /// Wave impedance, Ω; reactive below cutoff.
    pub z_wave: Complex,
}

impl ModeParams {
    /// True when the mode carries power.
    pub fn is_propagating(&self) -> bool {
        matches!(self.dispersion, Dispersion::Propagating { .. })
    }
}

/// Lossless velocity and impedance of the fill.
fn fill_constants(fill: &Medium) -> (f64, f64) {
    (fill.velocity(), fill.eta_lossless())
}

fn mode_params(family: ModeFamily, f_c: f64, f: f64, fill: &Medium) -> ModeParams {
    let (v, eta) = fill_constants(fill);
    let k = 2.0 * PI * f / v;
    if f > f_c {
        let s = (1.0 - (f_c / f).powi(2)).sqrt();
        let z = match family {
            ModeFamily::TE => eta / s,
            ModeFamily::TM => eta * s,
            ModeFamily::TEM => eta,
        };
        ModeParams {
            f_c,
            dispersion: Dispersion::Propagating { beta: k * s },
            lambda_g: v / (f * s),
            v_p: v / s,
            v_g: v * s,
            z_wave: Complex::new(z, 0.0),
        }
    } else {
        let s = ((f_c / f).powi(2) - 1.0).sqrt();
        let z = match family {
            ModeFamily::TE if s == 0.0 => Complex::new(f64::INFINITY, 0.0),
            ModeFamily::TE => Complex::new(0.0, eta / s),
            _ => Complex::new(0.0, -eta * s),
        };
        ModeParams {
            f_c,
            dispersion: Dispersion::Cutoff { alpha: k * s },
            lambda_g: f64::INFINITY,
            v_p: f64::INFINITY,
            v_g: 0.0,
            z_wave: z,
        }
    }
}

/// Cutoff frequency `v/2·√((m/a)² + (n/b)²)` of a rectangular mode.
pub fn rect_cutoff(guide: &RectGuide, mode: ModeId) -> Result<f64> {
    guide.validate()?;
    let ok = match mode.family {
        ModeFamily::TE => mode.m + mode.n > 0,
        ModeFamily::TM => mode.m >= 1 && mode.n >= 1,
        ModeFamily::TEM => false,
    };
    if !ok {
        return Err(Error::InvalidMode(format!("{mode} does not exist in a rectangular guide")));
    }
    let (v, _) = fill_constants(&guide.fill);
    Ok(0.5 * v * ((mode.m as f64 / guide.a).powi(2) + (mode.n as f64 / guide.b).powi(2)).sqrt())
}

/// Modal quantities of a rectangular mode at frequency `f`.
pub fn rect_mode_params(guide: &RectGuide, mode: ModeId, f: f64) -> Result<ModeParams> {
    check_frequency(f)?;
    let f_c = rect_cutoff(guide, mode)?;
    Ok(mode_params(mode.family, f_c, f, &guide.fill))
}

/// Every rectangular mode with indices up to `max_index` whose cutoff lies
/// below `f`, sorted by cutoff, then TE before TM, then indices.
pub fn mode_census(guide: &RectGuide, f: f64, max_index: u32) -> Result<Vec<(ModeId, f64)>> {
    check_frequency(f)?;
    if max_index < 1 {
        return Err(invalid("max_index must be at least 1"));
    }
    guide.validate()?;
    let mut out = Vec::new();
    for m in 0..=max_index {
        for n in 0..=max_index {
            for mode in [ModeId::te(m, n), ModeId::tm(m, n)] {
                if let Ok(fc) = rect_cutoff(guide, mode) {
                    if fc < f {
                        out.push((mode, fc));
                    }
                }
            }
        }
    }
    out.sort_by(|(ma, fa), (mb, fb)| {
        fa.total_cmp(fb).then(ma.family.cmp(&mb.family)).then(ma.m.cmp(&mb.m)).then(ma.n.cmp(&mb.n))
    });
    Ok(out)
}

/// Broad and narrow dimensions giving TE10 and TE01 cutoffs `f10` and `f01`.
pub fn rect_dims_for_cutoffs(f10: f64, f01: f64, fill: &Medium) -> Result<(f64, f64)> {
    check_frequency(f10)?;
    check_frequency(f01)?;
    if f01 < f10 {
        return Err(invalid("TE01 cutoff must not be below TE10 for a ≥ b"));
    }
    check_fill(fill)?;
    let v = fill.velocity();
    Ok((v / (2.0 * f10), v / (2.0 * f01)))
}

fn te10_factor(guide: &RectGuide, f: f64) -> Result<(f64, f64)> {
    check_frequency(f)?;
    let fc = rect_cutoff(guide, ModeId::te(1, 0))?;
    if f <= fc {
        return Err(Error::BelowCutoff { f, f_c: fc });
    }
    let eta = guide.fill.eta_lossless();
    let s = (1.0 - (fc / f).powi(2)).sqrt();
    Ok((guide.a * guide.b / 4.0 * eta * (f / fc).powi(2) * s, fc))
}

/// Time-averaged TE10 power for `H_z = C·cos(πx/a)`,
/// `(abC²/4)·η·(f/fc)²·√(1 − (fc/f)²)`, W.
pub fn te10_power(guide: &RectGuide, f: f64, c_amp: f64) -> Result<f64> {
    let (k, _) = te10_factor(guide, f)?;
    Ok(k * c_amp * c_amp)
}

/// Amplitude `C`, A/m, that carries power `p` in TE10.
pub fn power_to_c(guide: &RectGuide, f: f64, p: f64) -> Result<f64> {
    if !(p >= 0.0) || !p.is_finite() {
        return Err(invalid("power must be finite and non-negative"));
    }
    let (k, _) = te10_factor(guide, f)?;
    Ok((p / k).sqrt())
}

/// Peak transverse electric field of TE10, `C·ωμa/π`, V/m.
pub fn peak_e_field(guide: &RectGuide, f: f64, c_amp: f64) -> Result<f64> {
    te10_factor(guide, f)?;
    Ok(c_amp.abs() * 2.0 * PI * f * MU0 * guide.fill.mu_r_re * guide.a / PI)
}

/// Surface resistance `√(ωμ0/2σ)` of a wall, Ω.
pub fn surface_resistance(f: f64, sigma: f64) -> f64 {
    (PI * f * MU0 / sigma).sqrt()
}

/// TE10 attenuation `(α_d, α_m)`, Np/m, from fill and wall losses.
///
/// `α_d = σ_eff·η/(2√(1 − (fc/f)²))` with `σ_eff = σ + ωε0ε″`, and
/// `α_m = Rs·(2b/a·(fc/f)² + 1)/(b·η·√(1 − (fc/f)²))`, zero for perfect walls.
pub fn rect_attenuation(guide: &RectGuide, f: f64) -> Result<(f64, f64)> {
    let (_, fc) = te10_factor(guide, f)?;
    let eta = guide.fill.eta_lossless();
    let r2 = (fc / f).powi(2);
    let s = (1.0 - r2).sqrt();
    let alpha_d = guide.fill.sigma_eff(f) * eta / (2.0 * s);
    let alpha_m = match guide.wall_sigma {
        Some(sigma) => surface_resistance(f, sigma) * (2.0 * guide.b / guide.a * r2 + 1.0) / (guide.b * eta * s),
        None => 0.0,
    };
    Ok((alpha_d, alpha_m))
}

/// Where circular-guide roots come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSource {
    /// Tabulated three-decimal values only.
    Table,
    /// Table when listed, otherwise located numerically.
    TableOrRefined,
    /// Always located numerically.
    Refined,
}

fn circular_root(mode: ModeId, source: RootSource) -> Result<f64> {
    if mode.family == ModeFamily::TEM {
        return Err(Error::InvalidMode("a hollow circular guide has no TEM mode".into()));
    }
    match source {
        RootSource::Table => bessel_root(mode.family, mode.m, mode.n, false),
        RootSource::Refined => bessel_root(mode.family, mode.m, mode.n, true),
        RootSource::TableOrRefined => match table_entry(mode.family, mode.m, mode.n) {
            Some(e) => Ok(e.root),
            None => bessel_root(mode.family, mode.m, mode.n, true),
        },
    }
}

/// Cutoff wavelength in the unfilled guide, `2π·r0/k`, m.
pub fn circular_cutoff_wavelength(r0: f64, mode: ModeId, source: RootSource) -> Result<f64> {
    if !(r0 > 0.0) || !r0.is_finite() {
        return Err(Error::InvalidGeometry("radius must be positive".into()));
    }
    Ok(2.0 * PI * r0 / circular_root(mode, source)?)
}

/// Modal quantities of a circular-guide mode with radius `r0`;
/// `f_c = v·k/(2π·r0)`.
pub fn circular_params(r0: f64, mode: ModeId, f: f64, fill: &Medium, source: RootSource) -> Result<ModeParams> {
    check_frequency(f)?;
    check_fill(fill)?;
    let lambda_c = circular_cutoff_wavelength(r0, mode, source)?;
    Ok(mode_params(mode.family, fill.velocity() / lambda_c, f, fill))
}

/// Relative permittivity of a lossless fill that gives guide wavelength
/// `lambda_g` at free-space wavelength `lambda0` when the empty-guide cutoff
/// wavelength is `lambda_c`: `εr = λ0²·(1/λg² + 1/λc²)`.
pub fn fill_for_guide_wavelength(lambda0: f64, lambda_g: f64, lambda_c: f64) -> Result<f64> {
    if !(lambda0 > 0.0) || !(lambda_g > 0.0) || !(lambda_c > 0.0) {
        return Err(invalid("wavelengths must be positive"));
    }
    Ok(lambda0 * lambda0 * (1.0 / (lambda_g * lambda_g) + 1.0 / (lambda_c * lambda_c)))
}

/// Relative permittivity that lowers an empty-guide cutoff `f_c_empty` to
/// `f_c_target`: `(f_c_empty/f_c_target)²`.
pub fn fill_for_cutoff(f_c_empty: f64, f_c_target: f64) -> Result<f64> {
    check_frequency(f_c_empty)?;
    check_frequency(f_c_target)?;
    Ok((f_c_empty / f_c_target).powi(2))
}

/// Parallel-plate guide of separation `a`: modal quantities, wall loss
/// `α_c` and fill loss `α_d`, Np/m.
///
/// `α_c` is `Rs/(ηa)` for TEM, `2Rs(fc/f)²/(ηa√(1 − (fc/f)²))` for TE and
/// `2Rs/(ηa√(1 − (fc/f)²))` for TM; `α_d = σ_eff·η/(2√(1 − (fc/f)²))`.
pub fn parallel_plate(
    a: f64,
    mode: ModeId,
    f: f64,
    fill: &Medium,
    wall_sigma: Option<f64>,
) -> Result<(ModeParams, f64, f64)> {
    check_frequency(f)?;
    check_fill(fill)?;
    check_wall(wall_sigma)?;
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::InvalidGeometry("plate separation must be positive".into()));
    }
    let (v, eta) = fill_constants(fill);
    let f_c = match mode.family {
        ModeFamily::TEM => 0.0,
        _ if mode.m == 0 => {
            return Err(Error::InvalidMode(format!("{mode} needs m ≥ 1 between plates")));
        }
        _ => mode.m as f64 * v / (2.0 * a),
    };
    if f <= f_c {
        return Err(Error::BelowCutoff { f, f_c });
    }
    let params = mode_params(mode.family, f_c, f, fill);
    let r = f_c / f;
    let s = (1.0 - r * r).sqrt();
    let rs = wall_sigma.map_or(0.0, |sigma| surface_resistance(f, sigma));
    let alpha_c = match mode.family {
        ModeFamily::TEM => rs / (eta * a),
        ModeFamily::TE => 2.0 * rs * r * r / (eta * a * s),
        ModeFamily::TM => 2.0 * rs / (eta * a * s),
    };
    let alpha_d = fill.sigma_eff(f) * eta / (2.0 * s);
    Ok((params, alpha_c, alpha_d))
}

/// Coaxial line with conductor radii `a < b`: `(Z0, α_c, α_d)` with
/// `Z0 = η·ln(b/a)/2π`, `α_c = Rs(1/a + 1/b)/(2η·ln(b/a))` and
/// `α_d = σ_eff·η/2`.
pub fn coax_tem(a_inner: f64, b_outer: f64, fill: &Medium, wall_sigma: Option<f64>, f: f64) -> Result<(f64, f64, f64)> {
    if !(a_inner > 0.0) || !(b_outer > a_inner) || !b_outer.is_finite() {
        return Err(Error::InvalidGeometry("coax needs b > a > 0".into()));
    }
    check_frequency(f)?;
    check_fill(fill)?;
    check_wall(wall_sigma)?;
    let eta = fill.eta_lossless();
    let ln = (b_outer / a_inner).ln();
    let rs = wall_sigma.map_or(0.0, |sigma| surface_resistance(f, sigma));
    let alpha_c = rs * (1.0 / a_inner + 1.0 / b_outer) / (2.0 * eta * ln);
    let alpha_d = fill.sigma_eff(f) * eta / 2.0;
    Ok((eta * ln / (2.0 * PI), alpha_c, alpha_d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{C0, ETA0};
    use crate::lineparams::{geometric_z0, LineGeometry};

    fn air() -> Medium {
        Medium::vacuum()
    }

    fn diel(e: f64) -> Medium {
        Medium::dielectric(e).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a / b - 1.0).abs() <= rel
    }

    #[test]
    fn cutoff_table() {
        let g = RectGuide::new(0.02286, 0.01524, air(), None).unwrap();
        let f = |m| rect_cutoff(&g, m).unwrap() / 1e9;
        assert!(close(f(ModeId::te(1, 0)), 6.56, 5e-3));
        assert!(close(f(ModeId::te(0, 1)), 9.84, 5e-3));
        assert!(close(f(ModeId::tm(1, 1)), 11.83, 5e-3));
        assert_eq!(f(ModeId::te(1, 1)), f(ModeId::tm(1, 1)));
        assert!(close(f(ModeId::te(2, 0)), 13.12, 5e-3));
        let g2 = RectGuide::new(0.04572, 0.03048, air(), None).unwrap();
        assert!(close(rect_cutoff(&g2, ModeId::te(2, 1)).unwrap(), rect_cutoff(&g, ModeId::te(2, 1)).unwrap() / 2.0, 1e-15));
    }

    #[test]
    fn invalid_modes() {
        let g = RectGuide::new(0.02, 0.01, air(), None).unwrap();
        assert!(matches!(rect_cutoff(&g, ModeId::te(0, 0)), Err(Error::InvalidMode(_))));
        assert!(matches!(rect_cutoff(&g, ModeId::tm(1, 0)), Err(Error::InvalidMode(_))));
        assert!(matches!(rect_cutoff(&g, ModeId::tem()), Err(Error::InvalidMode(_))));
        assert!(RectGuide::new(0.01, 0.02, air(), None).is_err());
    }

    #[test]
    fn teflon_cutoff() {
        let g = RectGuide::new(0.025, 0.01, diel(2.11), None).unwrap();
        assert!(close(rect_cutoff(&g, ModeId::te(1, 0)).unwrap(), 4.1306e9, 5e-3));
    }

    #[test]
    fn velocities() {
        let g = RectGuide::new(0.07, 0.04, air(), None).unwrap();
        let fc = rect_cutoff(&g, ModeId::te(1, 0)).unwrap();
        let p = rect_mode_params(&g, ModeId::te(1, 0), 1.3 * fc).unwrap();
        assert!(close(p.v_p, 4.67e8, 5e-3) && close(p.v_g, 1.92e8, 5e-3));
        assert!(close(p.v_p * p.v_g, C0 * C0, 1e-12));
    }

    #[test]
    fn at_and_below_cutoff() {
        let g = RectGuide::new(0.02, 0.01, air(), None).unwrap();
        let fc = rect_cutoff(&g, ModeId::te(1, 0)).unwrap();
        let p = rect_mode_params(&g, ModeId::te(1, 0), fc).unwrap();
        assert_eq!(p.dispersion, Dispersion::Cutoff { alpha: 0.0 });
        assert!(p.lambda_g.is_infinite());
        let p = rect_mode_params(&g, ModeId::te(1, 0), fc / 2.0).unwrap();
        let Dispersion::Cutoff { alpha } = p.dispersion else { panic!() };
        let want = ((PI / 0.02f64).powi(2) - (2.0 * PI * fc / 2.0 / C0).powi(2)).sqrt();
        assert!(close(alpha, want, 1e-12));
        assert!(p.z_wave.im > 0.0 && p.z_wave.re == 0.0);
    }

    #[test]
    fn wave_impedance() {
        let g = RectGuide::new(0.01, 0.007, diel(2.25), None).unwrap();
        let p = rect_mode_params(&g, ModeId::te(1, 0), 20e9).unwrap();
        assert!(close(p.z_wave.re, 290.0, 5e-3));
        let g = RectGuide::new(0.03, 0.01, air(), None).unwrap();
        let te = rect_mode_params(&g, ModeId::te(1, 1), 20e9).unwrap();
        let tm = rect_mode_params(&g, ModeId::tm(1, 1), 20e9).unwrap();
        assert!(close((te.z_wave * tm.z_wave).re, ETA0 * ETA0, 1e-12));
    }

    #[test]
    fn census() {
        let g = RectGuide::new(0.02286, 0.01524, air(), None).unwrap();
        let list = mode_census(&g, 12e9, 5).unwrap();
        let names: Vec<String> = list.iter().map(|(m, _)| m.to_string()).collect();
        assert_eq!(names, ["TE10", "TE01", "TE11", "TM11"]);
        assert!(mode_census(&g, 6e9, 5).unwrap().is_empty());
    }

    #[test]
    fn census_filled_guide() {
        let g = RectGuide::new(0.05, 0.03, diel(2.0), None).unwrap();
        let list = mode_census(&g, 7.5e9, 6).unwrap();
        let names: Vec<String> = list.iter().map(|(m, _)| m.to_string()).collect();
        assert_eq!(
            names,
            ["TE10", "TE01", "TE11", "TM11", "TE20", "TE21", "TM21", "TE30", "TE02", "TE31", "TM31", "TE12", "TM12"]
        );
        assert!(list.iter().all(|(m, fc)| *fc == rect_cutoff(&g, *m).unwrap() && *fc < 7.5e9));
    }

    #[test]
    fn dims_for_cutoffs() {
        let (a, b) = rect_dims_for_cutoffs(4.5e9, 7.5e9, &air()).unwrap();
        assert!((a - 0.0333).abs() < 1e-4 && (b - 0.02).abs() < 1e-4);
    }

    #[test]
    fn power_round_trip() {
        let g = RectGuide::new(0.025, 0.01, air(), None).unwrap();
        let c = power_to_c(&g, 9e9, 0.3).unwrap();
        assert!((2.73..=2.77).contains(&c), "{c}");
        assert!(close(te10_power(&g, 9e9, c).unwrap(), 0.3, 1e-14));
        assert_eq!(te10_power(&g, 9e9, 0.0).unwrap(), 0.0);
        let e = peak_e_field(&g, 9e9, c).unwrap();
        assert!((1.5e3..1.6e3).contains(&e));
        assert!(matches!(te10_power(&g, 5e9, 1.0), Err(Error::BelowCutoff { .. })));
    }

    #[test]
    fn copper_teflon_attenuation() {
        let g = RectGuide::new(0.025, 0.01, diel(2.11), Some(5.8e7)).unwrap();
        let f = 1.453 * rect_cutoff(&g, ModeId::te(1, 0)).unwrap();
        assert!(close(surface_resistance(f, 5.8e7), 0.020209, 5e-3));
        let (ad, am) = rect_attenuation(&g, f).unwrap();
        assert_eq!(ad, 0.0);
        assert!((am - 0.015).abs() < 0.001);
        assert!((am * crate::constants::DB_PER_NEPER - 0.129).abs() < 0.002);
    }

    #[test]
    fn circular_examples() {
        let te11 = ModeId::te(1, 1);
        let p = circular_params(0.06, te11, 1.5e9, &air(), RootSource::Table).unwrap();
        assert!(close(p.f_c, 1.464e9, 5e-3));
        let lc = circular_cutoff_wavelength(1.0, te11, RootSource::Table).unwrap();
        assert!((lc - 3.41).abs() < 0.005);
        let p = circular_params(0.00976, te11, 10e9, &air(), RootSource::Table).unwrap();
        assert!(close(p.lambda_g, 0.06883, 5e-3));
        let empty = circular_params(0.00976, ModeId::te(0, 1), 10e9, &air(), RootSource::Table).unwrap();
        assert!(close(fill_for_cutoff(empty.f_c, p.f_c).unwrap(), 4.337, 5e-3));
        let tm01 = circular_params(0.01, ModeId::tm(0, 1), 10e9, &air(), RootSource::Table).unwrap();
        let te11 = circular_params(0.01, te11, 10e9, &air(), RootSource::Table).unwrap();
        assert!(te11.f_c < tm01.f_c);
        assert!(matches!(
            circular_params(0.01, ModeId::te(9, 1), 10e9, &air(), RootSource::Table),
            Err(Error::UnknownMode(_))
        ));
        assert!(circular_params(0.01, ModeId::te(9, 1), 10e9, &air(), RootSource::TableOrRefined).is_ok());
    }

    #[test]
    fn plates() {
        let (p, _, _) = parallel_plate(0.01, ModeId::tm(1, 0), 12e9, &diel(4.0), None).unwrap();
        assert!(close(p.f_c, 7.5e9, 5e-3));
        let Dispersion::Propagating { beta } = p.dispersion else { panic!() };
        assert!(close(beta, 392.4, 5e-3));
        assert!(close(p.v_p, 1.92e8, 5e-3));
        let (tem, ac1, _) = parallel_plate(0.01, ModeId::tem(), 1e9, &air(), Some(5.8e7)).unwrap();
        assert_eq!(tem.f_c, 0.0);
        assert!(close(tem.lambda_g, C0 / 1e9, 1e-15));
        let (_, ac2, _) = parallel_plate(0.02, ModeId::tem(), 1e9, &air(), Some(5.8e7)).unwrap();
        assert!(close(ac2, ac1 / 2.0, 1e-15));
        assert!(matches!(
            parallel_plate(0.01, ModeId::te(1, 0), 1e9, &air(), None),
            Err(Error::BelowCutoff { .. })
        ));
    }

    #[test]
    fn coax() {
        let (z0, _, ad) = coax_tem(1e-3, std::f64::consts::E * 1e-3, &air(), None, 1e9).unwrap();
        assert!(close(z0, 60.0, 5e-3));
        assert_eq!(ad, 0.0);
        let fill = diel(2.25);
        let (z0, _, _) = coax_tem(0.5e-3, 1.75e-3, &fill, None, 1e9).unwrap();
        let g = geometric_z0(&LineGeometry::Coaxial { a: 0.5e-3, b: 1.75e-3, eps_r: 2.25 }).unwrap();
        assert!(close(z0, g, 1e-12));
        assert!(matches!(coax_tem(2e-3, 1e-3, &air(), None, 1e9), Err(Error::InvalidGeometry(_))));
    }
}
