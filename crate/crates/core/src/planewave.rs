//! Uniform plane waves in general media: propagation and impedance, losses,
//! Poynting vector, polarization, Doppler shifts and direction-resolved
//! wavelengths.

use std::f64::consts::PI;

use crate::constants::{C0, DB_PER_NEPER, EPS0, ETA0};
use crate::error::{invalid, Error, Result};
use crate::Complex;

/// Complex 3-vector of phasor components `(x, y, z)`.
pub type Vec3 = [Complex; 3];

/// Linear, homogeneous, isotropic medium described by relative constants
/// `ε = ε0(ε′ − jε″)`, `μ = μ0(μ′ − jμ″)` and conductivity `σ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Medium {
    /// Relative permittivity, real part.
    pub eps_r_re: f64,
    /// Relative permittivity, loss part (non-negative).
    pub eps_r_im: f64,
    /// Relative permeability, real part.
    pub mu_r_re: f64,
    /// Relative permeability, loss part (non-negative).
    pub mu_r_im: f64,
    /// Conductivity, S/m. Infinite for a perfect conductor.
    pub sigma: f64,
    /// Allows `ε′ < 1`, as for plasmas.
    pub exotic: bool,
}

impl Medium {
    /// Validated medium with `ε′ ≥ 1`.
    pub fn new(eps_r_re: f64, eps_r_im: f64, mu_r_re: f64, mu_r_im: f64, sigma: f64) -> Result<Self> {
        let m = Self { eps_r_re, eps_r_im, mu_r_re, mu_r_im, sigma, exotic: false };
        m.validate()?;
        Ok(m)
    }

    /// Validated medium that may have `0 < ε′ < 1`.
    pub fn exotic(eps_r_re: f64, eps_r_im: f64, mu_r_re: f64, mu_r_im: f64, sigma: f64) -> Result<Self> {
        let m = Self { eps_r_re, eps_r_im, mu_r_re, mu_r_im, sigma, exotic: true };
        m.validate()?;
        Ok(m)
    }

    /// Free space.
    pub fn vacuum() -> Self {
        Self { eps_r_re: 1.0, eps_r_im: 0.0, mu_r_re: 1.0, mu_r_im: 0.0, sigma: 0.0, exotic: false }
    }

    /// Lossless non-magnetic dielectric.
    pub fn dielectric(eps_r: f64) -> Result<Self> {
        Self::new(eps_r, 0.0, 1.0, 0.0, 0.0)
    }

    /// Non-magnetic medium with conductivity `sigma`.
    pub fn conducting(eps_r: f64, sigma: f64) -> Result<Self> {
        Self::new(eps_r, 0.0, 1.0, 0.0, sigma)
    }

    /// Perfect electric conductor.
    pub fn pec() -> Self {
        Self { sigma: f64::INFINITY, ..Self::vacuum() }
    }

    /// True for a perfect conductor.
    pub fn is_pec(&self) -> bool {
        self.sigma == f64::INFINITY
    }

    /// Checks the documented invariants.
    pub fn validate(&self) -> Result<()> {
        let finite = [self.eps_r_re, self.eps_r_im, self.mu_r_re, self.mu_r_im];
        if finite.iter().any(|v| !v.is_finite()) || self.sigma.is_nan() {
            return Err(invalid("medium constants must be finite"));
        }
        if !(self.eps_r_re > 0.0) || !(self.mu_r_re > 0.0) {
            return Err(invalid("real parts of ε and μ must be positive"));
        }
        if !self.exotic && self.eps_r_re < 1.0 {
            return Err(invalid("ε′ below 1 requires an exotic medium"));
        }
        if self.eps_r_im < 0.0 || self.mu_r_im < 0.0 || self.sigma < 0.0 {
            return Err(invalid("loss terms must be non-negative"));
        }
        Ok(())
    }

    /// Relative complex permittivity with conduction folded in,
    /// `ε′ − j(ε″ + σ/ωε0)`.
    pub fn eps_c(&self, f: f64) -> Complex {
        let omega = 2.0 * PI * f;
        Complex::new(self.eps_r_re, -(self.eps_r_im + self.sigma / (omega * EPS0)))
    }

    /// Relative complex permeability `μ′ − jμ″`.
    pub fn mu_c(&self) -> Complex {
        Complex::new(self.mu_r_re, -self.mu_r_im)
    }

    /// Lossless intrinsic impedance `η0·√(μ′/ε′)`, Ω.
    pub fn eta_lossless(&self) -> f64 {
        ETA0 * (self.mu_r_re / self.eps_r_re).sqrt()
    }

    /// Lossless phase velocity `c/√(μ′ε′)`, m/s.
    pub fn velocity(&self) -> f64 {
        C0 / (self.mu_r_re * self.eps_r_re).sqrt()
    }

    /// Effective conductivity `σ + ωε0ε″`, S/m.
    pub fn sigma_eff(&self, f: f64) -> f64 {
        self.sigma + 2.0 * PI * f * EPS0 * self.eps_r_im
    }
}

/// Propagation parameters of a plane wave in a medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveParams {
    /// Attenuation, Np/m.
    pub alpha: f64,
    /// Phase constant, rad/m.
    pub beta: f64,
    /// Intrinsic impedance, Ω.
    pub eta: Complex,
    /// Penetration depth `1/α`, m; infinite for a lossless medium.
    pub delta: f64,
    /// Wavelength `2π/β`, m.
    pub lambda: f64,
    /// Phase velocity `ω/β`, m/s.
    pub v_p: f64,
}

impl WaveParams {
    /// Propagation constant `α + jβ`.
    pub fn gamma(&self) -> Complex {
        Complex::new(self.alpha, self.beta)
    }

    /// Field attenuation over distance `d`, dB.
    pub fn attenuation_db(&self, d: f64) -> f64 {
        self.alpha * d * DB_PER_NEPER
    }

    /// Fraction of power remaining after distance `d`.
    pub fn power_fraction(&self, d: f64) -> f64 {
        (-2.0 * self.alpha * d).exp()
    }
}

fn check_frequency(f: f64) -> Result<()> {
    if !(f > 0.0) || !f.is_finite() {
        return Err(invalid("frequency must be positive"));
    }
    Ok(())
}

/// Propagation constant, impedance and derived lengths at frequency `f`.
///
/// `γ = j(ω/c)·√μc·√εc` uses the product of principal roots so that
/// `α, β ≥ 0` for passive media.
pub fn wave_params(medium: &Medium, f: f64) -> Result<WaveParams> {
    medium.validate()?;
    check_frequency(f)?;
    if medium.is_pec() {
        return Ok(WaveParams {
            alpha: f64::INFINITY,
            beta: f64::INFINITY,
            eta: Complex::new(0.0, 0.0),
            delta: 0.0,
            lambda: 0.0,
            v_p: 0.0,
        });
    }
    let omega = 2.0 * PI * f;
    let sm = medium.mu_c().sqrt();
    let se = medium.eps_c(f).sqrt();
    let gamma = Complex::new(0.0, omega / C0) * sm * se;
    let eta = ETA0 * sm / se;
    let (alpha, beta) = (gamma.re.max(0.0), gamma.im);
    Ok(WaveParams {
        alpha,
        beta,
        eta,
        delta: if alpha > 0.0 { 1.0 / alpha } else { f64::INFINITY },
        lambda: 2.0 * PI / beta,
        v_p: omega / beta,
    })
}

/// Loss tangent and time-averaged dissipated power density.
///
/// `tan δ = (ε″ + σ/ωε0)/ε′`. The density is `ω·ε0·ε″_tot·E²_rms`, which
/// equals `π·f·ε0·ε″_tot·E²_peak`.
pub fn loss_metrics(medium: &Medium, f: f64, e0_rms: f64) -> Result<(f64, f64)> {
    medium.validate()?;
    check_frequency(f)?;
    if !(e0_rms >= 0.0) || !e0_rms.is_finite() {
        return Err(invalid("field amplitude must be finite and non-negative"));
    }
    let eps_c = medium.eps_c(f);
    let tan_delta = -eps_c.im / eps_c.re;
    let p_d = 2.0 * PI * f * EPS0 * (-eps_c.im) * e0_rms * e0_rms;
    Ok((tan_delta, p_d))
}

/// Amplitudes and relative phase of the `x` and `y` field components,
/// `E = x̂·E1·cos(ωt − βz) + ŷ·E2·cos(ωt − βz + δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationSpec {
    /// Peak amplitude along `x̂`, V/m.
    pub e1: f64,
    /// Peak amplitude along `ŷ`, V/m.
    pub e2: f64,
    /// Phase of the `y` component relative to `x`, rad.
    pub delta_phase: f64,
}

/// Sense of rotation for an observer looking along the direction of
/// propagation, so that the wave recedes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    /// Counter-clockwise rotation; `y` leads `x` (`0 < δ < π`).
    Left,
    /// Clockwise rotation; `y` lags `x` (`−π < δ < 0`).
    Right,
}

/// Polarization state of a plane wave travelling along `+z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Polarization {
    /// Field oscillates along a line at `angle` from `x̂`, rad.
    Linear {
        /// Orientation in `(−π/2, π/2]`.
        angle: f64,
    },
    /// Equal amplitudes in quadrature.
    Circular {
        /// Rotation sense.
        handedness: Handedness,
    },
    /// General ellipse.
    Elliptical {
        /// Rotation sense.
        handedness: Handedness,
        /// Major-axis angle from `x̂`, rad.
        tilt: f64,
        /// Semi-major axis, V/m.
        major: f64,
        /// Semi-minor axis, V/m.
        minor: f64,
    },
}

/// Default relative tolerance for polarization classification.
pub const DEFAULT_POLARIZATION_TOL: f64 = 1e-9;

/// Classifies the polarization described by `spec`.
///
/// Comparisons are relative to `max(E1, E2)` and to unit phase, so the
/// result is unchanged when both amplitudes are scaled together.
pub fn classify_polarization(spec: PolarizationSpec, tol: f64) -> Result<Polarization> {
    let PolarizationSpec { e1, e2, delta_phase } = spec;
    if !(e1 >= 0.0) || !(e2 >= 0.0) || !e1.is_finite() || !e2.is_finite() || !delta_phase.is_finite() {
        return Err(invalid("amplitudes must be finite and non-negative"));
    }
    if !(tol >= 0.0) {
        return Err(invalid("tolerance must be non-negative"));
    }
    let scale = e1.max(e2);
    if scale == 0.0 {
        return Err(Error::ZeroField);
    }
    let (s, c) = delta_phase.sin_cos();
    if e1 <= tol * scale {
        return Ok(Polarization::Linear { angle: PI / 2.0 });
    }
    if e2 <= tol * scale {
        return Ok(Polarization::Linear { angle: 0.0 });
    }
    if s.abs() <= tol {
        let sign = if c > 0.0 { 1.0 } else { -1.0 };
        return Ok(Polarization::Linear { angle: (sign * e2).atan2(e1) });
    }
    let handedness = if s > 0.0 { Handedness::Left } else { Handedness::Right };
    if (e1 - e2).abs() <= tol * scale && c.abs() <= tol {
        return Ok(Polarization::Circular { handedness });
    }
    let tilt = 0.5 * (2.0 * e1 * e2 * c).atan2(e1 * e1 - e2 * e2);
    let sum = e1 * e1 + e2 * e2;
    let root = ((e1 * e1 - e2 * e2).powi(2) + (2.0 * e1 * e2 * c).powi(2)).sqrt();
    let major = (0.5 * (sum + root)).sqrt();
    let minor = (0.5 * (sum - root)).max(0.0).sqrt();
    Ok(Polarization::Elliptical { handedness, tilt, major, minor })
}

/// Radar Doppler shift `2·v_r·f0/c`, positive for an approaching target.
pub fn doppler_em(v_r: f64, f0: f64) -> f64 {
    2.0 * v_r * f0 / C0
}

/// Radial speed producing Doppler shift `delta_f` at carrier `f0`.
pub fn doppler_em_speed(delta_f: f64, f0: f64) -> f64 {
    delta_f * C0 / (2.0 * f0)
}

/// Motion of a source or observer relative to the other party.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Motion {
    /// Moving toward the other party.
    Approaching,
    /// Moving away from the other party.
    Receding,
}

/// Observed frequency of an acoustic source, `fs·(v ± vo)/(v ∓ vs)`.
///
/// Speeds are magnitudes; the direction of each mover is given separately.
pub fn doppler_acoustic(
    f_s: f64,
    v: f64,
    v_source: f64,
    v_observer: f64,
    source: Motion,
    observer: Motion,
) -> Result<f64> {
    if !(v > 0.0) || !(f_s >= 0.0) || !(v_source >= 0.0) || !(v_observer >= 0.0) {
        return Err(invalid("frequency, wave speed and mover speeds must be non-negative"));
    }
    if v_source >= v {
        return Err(Error::SupersonicSource);
    }
    let num = match observer {
        Motion::Approaching => v + v_observer,
        Motion::Receding => v - v_observer,
    };
    if num < 0.0 {
        return Err(invalid("observer outruns the wave"));
    }
    let den = match source {
        Motion::Approaching => v - v_source,
        Motion::Receding => v + v_source,
    };
    Ok(f_s * num / den)
}

/// Unit propagation direction given by its direction cosines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionCosines {
    /// Cosine with `x̂`.
    pub cos_a: f64,
    /// Cosine with `ŷ`.
    pub cos_b: f64,
    /// Cosine with `ẑ`.
    pub cos_c: f64,
}

impl DirectionCosines {
    /// Validated cosines whose squares sum to one within 1e-12.
    pub fn new(cos_a: f64, cos_b: f64, cos_c: f64) -> Result<Self> {
        let n = cos_a * cos_a + cos_b * cos_b + cos_c * cos_c;
        if !((n - 1.0).abs() <= 1e-12) {
            return Err(invalid("direction cosines must have unit norm"));
        }
        Ok(Self { cos_a, cos_b, cos_c })
    }

    /// Direction of the vector `(x, y, z)`.
    pub fn from_vector(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return Err(invalid("direction vector must be non-zero and finite"));
        }
        Ok(Self { cos_a: x / n, cos_b: y / n, cos_c: z / n })
    }

    /// Cosines as an array `[x, y, z]`.
    pub fn as_array(&self) -> [f64; 3] {
        [self.cos_a, self.cos_b, self.cos_c]
    }
}

/// Phase constant, wavelength and phase velocity seen along one axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisComponent {
    /// Signed phase constant along the axis, rad/m.
    pub beta: f64,
    /// Wavelength along the axis, m; `None` when the wave has no phase
    /// progression along it.
    pub lambda: Option<f64>,
    /// Phase velocity along the axis, m/s; `None` under the same condition.
    pub v_p: Option<f64>,
}

/// Per-axis phase constants, wavelengths and phase velocities of a wave
/// with phase constant `beta` travelling along `dir` at frequency `f`.
pub fn directional_components(beta: f64, dir: DirectionCosines, f: f64) -> Result<[AxisComponent; 3]> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(invalid("phase constant must be positive"));
    }
    check_frequency(f)?;
    let lambda = 2.0 * PI / beta;
    let v_p = 2.0 * PI * f / beta;
    Ok(dir.as_array().map(|c| {
        if c == 0.0 {
            AxisComponent { beta: 0.0, lambda: None, v_p: None }
        } else {
            AxisComponent { beta: beta * c, lambda: Some(lambda / c.abs()), v_p: Some(v_p / c.abs()) }
        }
    }))
}

/// Third axis wavelength and the direction cosines implied by the free-space
/// wavelength `lambda` and the wavelengths measured along `x` and `y`.
///
/// The sign of the `z` cosine is not determined by the data and is returned
/// as non-negative.
pub fn direction_from_axis_wavelengths(lambda: f64, lambda_x: f64, lambda_y: f64) -> Result<(f64, DirectionCosines)> {
    if !(lambda > 0.0) || !(lambda_x >= lambda) || !(lambda_y >= lambda) {
        return Err(invalid("axis wavelengths must be at least the wavelength"));
    }
    let a = lambda / lambda_x;
    let b = lambda / lambda_y;
    let c2 = 1.0 - a * a - b * b;
    if c2 < 0.0 {
        return Err(Error::NoSolution("axis wavelengths are too short".into()));
    }
    let c = c2.sqrt();
    let lambda_z = if c == 0.0 { f64::INFINITY } else { lambda / c };
    Ok((lambda_z, DirectionCosines { cos_a: a, cos_b: b, cos_c: c }))
}

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Magnetic field `n̂ × E / η` of a plane wave with electric field `e_field`.
///
/// Fails with [`Error::NotTransverse`] when `|E·n̂|` exceeds `1e-9·|E|`.
pub fn companion_field(e_field: &Vec3, dir: DirectionCosines, eta: Complex) -> Result<Vec3> {
    if eta.norm() == 0.0 || !eta.re.is_finite() || !eta.im.is_finite() {
        return Err(invalid("impedance must be finite and non-zero"));
    }
    let n = dir.as_array();
    let dot: Complex = (0..3).map(|i| e_field[i] * n[i]).sum();
    let mag: f64 = e_field.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if dot.norm() > 1e-9 * mag {
        return Err(Error::NotTransverse);
    }
    let nc = n.map(|v| Complex::new(v, 0.0));
    Ok(cross(&nc, e_field).map(|c| c / eta))
}

/// Time-averaged Poynting vector `½·Re(E × H*)`, W/m².
pub fn poynting_avg(e: &Vec3, h: &Vec3) -> [f64; 3] {
    let hc = h.map(|c| c.conj());
    cross(e, &hc).map(|c| 0.5 * c.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn vacuum_constants() {
        let w = wave_params(&Medium::vacuum(), 1e9).unwrap();
        assert_eq!(w.alpha, 0.0);
        assert_relative_eq!(w.eta.re, 376.73, max_relative = 1e-5);
        assert_eq!(w.eta.im, 0.0);
        assert_relative_eq!(w.v_p, C0, max_relative = 1e-12);
        assert!(w.delta.is_infinite());
    }

    #[test]
    fn good_conductor_example() {
        let m = Medium::conducting(2.25, 0.04).unwrap();
        let w = wave_params(&m, 1e6).unwrap();
        assert!((w.alpha / 0.397 - 1.0).abs() < 5e-3);
        assert!((w.beta / 0.397 - 1.0).abs() < 5e-3);
        assert!(w.beta > w.alpha);
        assert!((w.delta - 2.52).abs() < 0.01);
    }

    #[test]
    fn medium_validation() {
        assert!(Medium::new(0.5, 0.0, 1.0, 0.0, 0.0).is_err());
        assert!(Medium::exotic(0.5, 0.0, 1.0, 0.0, 0.0).is_ok());
        assert!(Medium::new(2.0, -0.1, 1.0, 0.0, 0.0).is_err());
        assert!(Medium::new(2.0, 0.0, 1.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn loss_tangent_and_density() {
        let (t, p) = loss_metrics(&Medium::dielectric(4.0).unwrap(), 1e9, 10.0).unwrap();
        assert_eq!(t, 0.0);
        assert_eq!(p, 0.0);
        let m = Medium::new(4.0, 1.0, 1.0, 0.0, 0.0).unwrap();
        let (t, p) = loss_metrics(&m, 2.45e9, 1.0).unwrap();
        assert_relative_eq!(t, 0.25, max_relative = 1e-12);
        assert_relative_eq!(p, 2.0 * PI * 2.45e9 * EPS0, max_relative = 1e-12);
    }

    #[test]
    fn polarization_examples() {
        let p = classify_polarization(PolarizationSpec { e1: 4.0, e2: 8.0, delta_phase: 0.0 }, 1e-9).unwrap();
        let Polarization::Linear { angle } = p else { panic!("{p:?}") };
        assert_relative_eq!(angle.tan(), 2.0, max_relative = 1e-12);
        let p = classify_polarization(PolarizationSpec { e1: 4.0, e2: 4.0, delta_phase: PI / 2.0 }, 1e-9).unwrap();
        assert_eq!(p, Polarization::Circular { handedness: Handedness::Left });
        let p = classify_polarization(PolarizationSpec { e1: 4.0, e2: 2.0, delta_phase: PI / 2.0 }, 1e-9).unwrap();
        let Polarization::Elliptical { handedness, tilt, major, minor } = p else { panic!("{p:?}") };
        assert_eq!(handedness, Handedness::Left);
        assert!(tilt.abs() < 1e-15);
        assert_relative_eq!(major, 4.0, max_relative = 1e-12);
        assert_relative_eq!(minor, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn polarization_edge_cases() {
        let z = classify_polarization(PolarizationSpec { e1: 0.0, e2: 0.0, delta_phase: 0.0 }, 1e-9);
        assert_eq!(z, Err(Error::ZeroField));
        let p = classify_polarization(PolarizationSpec { e1: 1.0, e2: 1.0, delta_phase: PI }, 1e-9).unwrap();
        let Polarization::Linear { angle } = p else { panic!() };
        assert_relative_eq!(angle, -PI / 4.0, max_relative = 1e-12);
        let p = classify_polarization(PolarizationSpec { e1: 3.0, e2: 3.0, delta_phase: -PI / 2.0 }, 1e-9).unwrap();
        assert_eq!(p, Polarization::Circular { handedness: Handedness::Right });
    }

    #[test]
    fn radar_doppler() {
        assert_eq!(doppler_em(0.0, 1e10), 0.0);
        assert!((doppler_em_speed(6.4e3, 12e9) - 80.0).abs() < 0.4);
        assert!((doppler_em(111.111, 12e9) - 8888.0).abs() < 0.005 * 8888.0);
        assert!(doppler_em(-10.0, 1e9) < 0.0);
    }

    #[test]
    fn acoustic_doppler() {
        use Motion::*;
        let f = doppler_acoustic(800.0, 345.0, 25.0, 0.0, Approaching, Approaching).unwrap();
        assert!((f - 863.0).abs() < 1.0);
        let f = doppler_acoustic(400.0, 345.0, 27.78, 22.22, Approaching, Approaching).unwrap();
        assert!((f - 463.0).abs() < 1.0);
        let f = doppler_acoustic(400.0, 345.0, 27.78, 22.22, Approaching, Receding).unwrap();
        assert!((f - 407.0).abs() < 1.0);
        assert_eq!(doppler_acoustic(500.0, 345.0, 0.0, 0.0, Receding, Receding).unwrap(), 500.0);
        assert_eq!(
            doppler_acoustic(500.0, 345.0, 345.0, 0.0, Approaching, Approaching),
            Err(Error::SupersonicSource)
        );
    }

    #[test]
    fn directional_example() {
        let dir = DirectionCosines::new(0.75, 3f64.sqrt() / 4.0, 0.5).unwrap();
        let comps = directional_components(0.2094, dir, 10e6).unwrap();
        let lam: Vec<f64> = comps.iter().map(|c| c.lambda.unwrap()).collect();
        assert!((lam[0] - 40.0).abs() < 0.05 && (lam[1] - 69.28).abs() < 0.1 && (lam[2] - 60.0).abs() < 0.1);
        assert!((comps[0].v_p.unwrap() - 4e8).abs() < 0.005 * 4e8);
        let x = directional_components(1.0, DirectionCosines::new(1.0, 0.0, 0.0).unwrap(), 1e6).unwrap();
        assert_eq!(x[0].lambda, Some(2.0 * PI));
        assert_eq!(x[1].lambda, None);
        assert_eq!(x[2].v_p, None);
    }

    #[test]
    fn companion_examples() {
        let dir = DirectionCosines::new(0.0, 0.0, 1.0).unwrap();
        let h = companion_field(&[c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)], dir, c(100.0, 0.0)).unwrap();
        assert_eq!(h, [c(0.0, 0.0), c(0.02, 0.0), c(0.0, 0.0)]);
        let e = companion_field(&[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], dir, c(100.0, 0.0));
        assert_eq!(e, Err(Error::NotTransverse));
    }

    #[test]
    fn poynting_linear() {
        let dir = DirectionCosines::new(0.0, 0.0, 1.0).unwrap();
        let e = [c(0.2, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let h = companion_field(&e, dir, c(ETA0, 0.0)).unwrap();
        let s = poynting_avg(&e, &h);
        assert!((s[2] - 53.1e-6).abs() < 0.1e-6);
        assert_eq!(s[0], 0.0);
        let zero = [c(0.0, 0.0); 3];
        assert_eq!(poynting_avg(&zero, &zero), [0.0; 3]);
    }
}
