//! Reflection and transmission at planar interfaces: normal and oblique
//! incidence, critical and Brewster angles, slabs and standing waves in front
//! of a reflector.
//!
//! Parallel-polarization coefficients use the orientation for which
//! `ρ∥ = tan(θi − θt)/tan(θi + θt)` in non-magnetic media, so at normal
//! incidence `ρ∥ = −ρ⊥` while `τ∥ = τ⊥`.

use crate::error::{invalid, Error, Result};
use crate::planewave::{wave_params, Medium};
use crate::Complex;

/// Two half-spaces meeting at a plane, excited at frequency `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interface {
    /// Medium of the incident wave.
    pub medium1: Medium,
    /// Medium beyond the interface.
    pub medium2: Medium,
    /// Frequency, Hz.
    pub f: f64,
}

impl Interface {
    /// Validated interface.
    pub fn new(medium1: Medium, medium2: Medium, f: f64) -> Result<Self> {
        let i = Self { medium1, medium2, f };
        i.validate()?;
        Ok(i)
    }

    fn validate(&self) -> Result<()> {
        if !(self.f > 0.0) || !self.f.is_finite() {
            return Err(invalid("frequency must be positive"));
        }
        if self.medium1.is_pec() {
            return Err(invalid("the incident medium cannot be a perfect conductor"));
        }
        self.medium1.validate()?;
        self.medium2.validate()
    }

    /// Intrinsic impedances `(Z1, Z2)`.
    pub fn impedances(&self) -> Result<(Complex, Complex)> {
        self.validate()?;
        Ok((wave_params(&self.medium1, self.f)?.eta, wave_params(&self.medium2, self.f)?.eta))
    }

    /// Complex wavenumbers `k = β − jα` of both media; `None` for a perfect
    /// conductor.
    fn wavenumbers(&self) -> Result<(Complex, Option<Complex>)> {
        let w1 = wave_params(&self.medium1, self.f)?;
        let k1 = Complex::new(w1.beta, -w1.alpha);
        if self.medium2.is_pec() {
            return Ok((k1, None));
        }
        let w2 = wave_params(&self.medium2, self.f)?;
        Ok((k1, Some(Complex::new(w2.beta, -w2.alpha))))
    }
}

/// Normal-incidence reflection and transmission coefficients
/// `ρ = (Z2 − Z1)/(Z2 + Z1)`, `τ = 2Z2/(Z2 + Z1)`.
pub fn normal_coeffs(iface: &Interface) -> Result<(Complex, Complex)> {
    let (z1, z2) = iface.impedances()?;
    Ok(((z2 - z1) / (z2 + z1), 2.0 * z2 / (z2 + z1)))
}

/// Reflected and transmitted power fractions at normal incidence.
///
/// The transmitted fraction is `|τ|²·Re(1/Z2)/Re(1/Z1)`.
pub fn normal_power_split(iface: &Interface) -> Result<(f64, f64)> {
    let (z1, z2) = iface.impedances()?;
    let (rho, tau) = normal_coeffs(iface)?;
    let transmitted = if z2.norm() == 0.0 { 0.0 } else { tau.norm_sqr() * z2.inv().re / z1.inv().re };
    Ok((rho.norm_sqr(), transmitted))
}

/// Nature of the transmitted wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Refraction {
    /// Real refraction angle, rad.
    Real(f64),
    /// Total reflection from a lossless interface; the transmitted field
    /// decays away from the boundary.
    Evanescent,
    /// Lossy media, described by the complex `sin θt` and `cos θt`.
    Complex,
    /// Region 2 is a perfect conductor and carries no field.
    Opaque,
}

/// Oblique-incidence coefficients for both polarizations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObliqueResult {
    /// Transmitted wave classification.
    pub theta_t: Refraction,
    /// `sin θt` from Snell's law with complex wavenumbers.
    pub sin_theta_t: Complex,
    /// `cos θt`, on the branch whose transmitted field decays away from the
    /// interface.
    pub cos_theta_t: Complex,
    /// Perpendicular (TE) reflection coefficient.
    pub rho_perp: Complex,
    /// Perpendicular (TE) transmission coefficient.
    pub tau_perp: Complex,
    /// Parallel (TM) reflection coefficient.
    pub rho_par: Complex,
    /// Parallel (TM) transmission coefficient.
    pub tau_par: Complex,
}

/// Coefficients for a plane wave incident at `theta_i` (rad) from region 1.
pub fn oblique(iface: &Interface, theta_i: f64) -> Result<ObliqueResult> {
    if !(0.0..std::f64::consts::FRAC_PI_2).contains(&theta_i) {
        return Err(invalid("incidence angle must lie in [0, π/2)"));
    }
    let (z1, z2) = iface.impedances()?;
    let (k1, k2) = iface.wavenumbers()?;
    let (si, ci) = theta_i.sin_cos();
    let (theta_t, sin_t, cos_t) = match k2 {
        None => (Refraction::Opaque, Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)),
        Some(k2) => {
            let kx = k1 * si;
            let mut kz = (k2 * k2 - kx * kx).sqrt();
            if kz.im > 0.0 || (kz.im == 0.0 && kz.re < 0.0) {
                kz = -kz;
            }
            let sin_t = kx / k2;
            let cos_t = kz / k2;
            let lossless = k1.im == 0.0 && k2.im == 0.0;
            let kind = if !lossless {
                Refraction::Complex
            } else if kz.im == 0.0 {
                Refraction::Real(sin_t.re.atan2(cos_t.re))
            } else {
                Refraction::Evanescent
            };
            (kind, sin_t, cos_t)
        }
    };
    let a = z2 * ci;
    let b = z1 * cos_t;
    let den_perp = a + b;
    let c = z1 * ci;
    let d = z2 * cos_t;
    let den_par = c + d;
    Ok(ObliqueResult {
        theta_t,
        sin_theta_t: sin_t,
        cos_theta_t: cos_t,
        rho_perp: (a - b) / den_perp,
        tau_perp: 2.0 * a / den_perp,
        rho_par: (c - d) / den_par,
        tau_par: 2.0 * a / den_par,
    })
}

fn check_eps(eps1: f64, eps2: f64) -> Result<()> {
    if !(eps1 > 0.0) || !(eps2 > 0.0) || !eps1.is_finite() || !eps2.is_finite() {
        return Err(invalid("permittivities must be positive"));
    }
    Ok(())
}

/// Critical angle `asin√(ε2/ε1)` for non-magnetic media, rad; `None` when
/// total reflection cannot occur (`ε2 ≥ ε1`).
pub fn critical_angle(eps1: f64, eps2: f64) -> Result<Option<f64>> {
    check_eps(eps1, eps2)?;
    Ok((eps2 < eps1).then(|| (eps2 / eps1).sqrt().asin()))
}

/// Brewster angle `atan√(ε2/ε1)` for non-magnetic media, rad.
pub fn brewster_angle(eps1: f64, eps2: f64) -> Result<f64> {
    check_eps(eps1, eps2)?;
    Ok((eps2 / eps1).sqrt().atan())
}

/// `e^{−2γd}`, which stays bounded for passive media.
fn decay2(gamma: Complex, d: f64) -> Complex {
    (-2.0 * gamma * d).exp()
}

fn check_slab(gamma2: Complex, d: f64) -> Result<()> {
    if !(d >= 0.0) || !d.is_finite() {
        return Err(invalid("slab thickness must be finite and non-negative"));
    }
    if gamma2.re < 0.0 || !gamma2.re.is_finite() || !gamma2.im.is_finite() {
        return Err(invalid("propagation constant must be finite with α ≥ 0"));
    }
    Ok(())
}

/// Impedance seen at the front of a slab `(z2, gamma2, d)` backed by `z3`,
/// `Ze = Z2·(Z3 + Z2·tanh γ2d)/(Z2 + Z3·tanh γ2d)`, and the reflection
/// coefficient `(Ze − Z1)/(Ze + Z1)` seen from region 1.
pub fn slab_equivalent(z1: Complex, z2: Complex, z3: Complex, gamma2: Complex, d: f64) -> Result<(Complex, Complex)> {
    check_slab(gamma2, d)?;
    let e = decay2(gamma2, d);
    let (p, m) = (1.0 + e, 1.0 - e);
    let den = z2 * p + z3 * m;
    if den.norm() == 0.0 {
        return Err(Error::Pole("slab presents an open circuit".into()));
    }
    let ze = z2 * (z3 * p + z2 * m) / den;
    let dr = ze + z1;
    if dr.norm() == 0.0 {
        return Err(Error::Pole("reflection coefficient is unbounded".into()));
    }
    Ok((ze, (ze - z1) / dr))
}

/// Single-pass transmission through a slab, `T12·T23·e^{−γ2d}`, ignoring
/// internal reflections, and the corresponding loss `20·log10(1/|ratio|)`, dB.
pub fn slab_through(z1: Complex, z2: Complex, z3: Complex, gamma2: Complex, d: f64) -> Result<(Complex, f64)> {
    check_slab(gamma2, d)?;
    let d12 = z2 + z1;
    let d23 = z3 + z2;
    if d12.norm() == 0.0 || d23.norm() == 0.0 {
        return Err(Error::Pole("transmission coefficient is unbounded".into()));
    }
    let ratio = (2.0 * z2 / d12) * (2.0 * z3 / d23) * (-gamma2 * d).exp();
    Ok((ratio, -20.0 * ratio.norm().log10()))
}

/// Quarter-wave antireflection layer between media `eps_r1` and `eps_r3`:
/// returns `(εr2, d)` with `εr2 = √(εr1·εr3)` and `d = λ0/(4√εr2)`.
///
/// Any odd multiple of `d` also works.
pub fn antireflection_layer(eps_r1: f64, eps_r3: f64, lambda0: f64) -> Result<(f64, f64)> {
    check_eps(eps_r1, eps_r3)?;
    if !(lambda0 > 0.0) || !lambda0.is_finite() {
        return Err(invalid("wavelength must be positive"));
    }
    let eps2 = (eps_r1 * eps_r3).sqrt();
    Ok((eps2, lambda0 / (4.0 * eps2.sqrt())))
}

/// Layered structure between two half-spaces, traversed from `front`.
#[derive(Debug, Clone, PartialEq)]
pub struct SlabStack {
    /// Incident half-space.
    pub front: Medium,
    /// Layers in order of incidence, each with its thickness in m.
    pub layers: Vec<(Medium, f64)>,
    /// Terminating half-space.
    pub back: Medium,
}

impl SlabStack {
    /// Input impedance at the front face and the normal-incidence reflection
    /// coefficient seen from the front medium.
    pub fn input(&self, f: f64) -> Result<(Complex, Complex)> {
        let z1 = wave_params(&self.front, f)?.eta;
        let mut z = wave_params(&self.back, f)?.eta;
        for (m, d) in self.layers.iter().rev() {
            if !(*d > 0.0) {
                return Err(invalid("layer thicknesses must be positive"));
            }
            let w = wave_params(m, f)?;
            z = slab_equivalent(z, w.eta, z, w.gamma(), *d)?.0;
        }
        let den = z + z1;
        if den.norm() == 0.0 {
            return Err(Error::Pole("reflection coefficient is unbounded".into()));
        }
        Ok((z, (z - z1) / den))
    }
}

/// Total field in region 1 for normal incidence on an interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandingWaveSurface {
    /// Incident amplitude, V/m.
    pub e_i: f64,
    /// Reflection coefficient at the interface.
    pub rho: Complex,
    /// Phase constant in region 1, rad/m.
    pub beta1: f64,
    /// Largest total field, `|Ei|(1 + |ρ|)`, V/m.
    pub max_field: f64,
    /// Surface current density `2|Ei|/|Z1|`, A/m, when region 2 is a perfect
    /// conductor.
    pub j_s: Option<f64>,
}

impl StandingWaveSurface {
    /// Envelope `|Ei|·|e^{jβd} + ρ·e^{−jβd}|` at distance `d` from the interface.
    pub fn envelope(&self, d: f64) -> f64 {
        let ph = Complex::from_polar(1.0, self.beta1 * d);
        self.e_i.abs() * (ph + self.rho * ph.conj()).norm()
    }
}

/// Standing-wave description for an incident amplitude `e_i` in a lossless
/// region 1.
pub fn standing_wave_surface(e_i: f64, iface: &Interface) -> Result<StandingWaveSurface> {
    if !e_i.is_finite() {
        return Err(invalid("incident amplitude must be finite"));
    }
    let w1 = wave_params(&iface.medium1, iface.f)?;
    if w1.alpha != 0.0 {
        return Err(invalid("region 1 must be lossless"));
    }
    let (rho, _) = normal_coeffs(iface)?;
    let j_s = iface.medium2.is_pec().then(|| 2.0 * e_i.abs() / w1.eta.norm());
    Ok(StandingWaveSurface { e_i, rho, beta1: w1.beta, max_field: e_i.abs() * (1.0 + rho.norm()), j_s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::ETA0;
    use std::f64::consts::PI;

    fn iface(m1: Medium, m2: Medium) -> Interface {
        Interface::new(m1, m2, 1e9).unwrap()
    }

    fn diel(e: f64) -> Medium {
        Medium::dielectric(e).unwrap()
    }

    #[test]
    fn normal_air_to_dielectric() {
        let i = iface(Medium::vacuum(), diel(4.0));
        let (rho, tau) = normal_coeffs(&i).unwrap();
        assert!((rho.re + 1.0 / 3.0).abs() < 1e-12 && rho.im == 0.0);
        assert!((tau.re - 2.0 / 3.0).abs() < 1e-12);
        let (r, t) = normal_power_split(&i).unwrap();
        assert!((r - 1.0 / 9.0).abs() < 1e-12 && (t - 8.0 / 9.0).abs() < 1e-12);
        let same = normal_coeffs(&iface(diel(2.0), diel(2.0))).unwrap();
        assert_eq!(same, (Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)));
    }

    #[test]
    fn perfect_conductor() {
        let i = iface(Medium::vacuum(), Medium::pec());
        let (rho, tau) = normal_coeffs(&i).unwrap();
        assert_eq!((rho, tau), (Complex::new(-1.0, 0.0), Complex::new(0.0, 0.0)));
        let o = oblique(&i, 0.5).unwrap();
        assert_eq!(o.theta_t, Refraction::Opaque);
        assert_eq!(o.rho_perp, Complex::new(-1.0, 0.0));
        let s = standing_wave_surface(10.0, &i).unwrap();
        assert!((s.j_s.unwrap() - 0.0531).abs() < 1e-4);
        assert_eq!(s.envelope(0.0), 0.0);
        let lambda = 2.0 * PI / s.beta1;
        assert!((s.envelope(lambda / 4.0) - 20.0).abs() < 1e-12);
        assert!(s.envelope(lambda / 2.0) < 1e-12);
    }

    #[test]
    fn standing_wave_on_dielectric() {
        let s = standing_wave_surface(50.0, &iface(Medium::vacuum(), diel(36.0))).unwrap();
        assert!((s.rho.re + 5.0 / 7.0).abs() < 1e-12);
        assert!((s.max_field / 85.5 - 1.0).abs() < 5e-3);
        assert_eq!(s.j_s, None);
    }

    #[test]
    fn oblique_reduces_to_normal() {
        let i = iface(Medium::vacuum(), diel(5.0));
        let o = oblique(&i, 0.0).unwrap();
        let (rho, tau) = normal_coeffs(&i).unwrap();
        assert!((o.rho_perp - rho).norm() < 1e-15 && (o.tau_perp - tau).norm() < 1e-15);
        assert!((o.rho_par + rho).norm() < 1e-15 && (o.tau_par - tau).norm() < 1e-15);
        assert_eq!(o.theta_t, Refraction::Real(0.0));
    }

    #[test]
    fn oblique_perpendicular_example() {
        let o = oblique(&iface(Medium::vacuum(), diel(5.0)), PI / 6.0).unwrap();
        assert!((o.rho_perp.re + 0.431).abs() < 1e-3);
        let c = critical_angle(5.0, 1.0).unwrap().unwrap();
        assert!((c.to_degrees() - 26.57).abs() < 0.03);
    }

    #[test]
    fn total_reflection() {
        let i = iface(diel(4.0), Medium::vacuum());
        let o = oblique(&i, PI / 4.0).unwrap();
        assert_eq!(o.theta_t, Refraction::Evanescent);
        assert!((o.rho_perp.norm() - 1.0).abs() < 1e-12);
        assert!((o.rho_par.norm() - 1.0).abs() < 1e-12);
        assert!(o.cos_theta_t.im < 0.0);
    }

    #[test]
    fn angles() {
        assert!((brewster_angle(1.0, 11.7).unwrap().to_degrees() - 73.7).abs() < 0.05);
        assert!((brewster_angle(11.7, 1.0).unwrap().to_degrees() - 16.3).abs() < 0.05);
        assert!((brewster_angle(1.0, 4.0).unwrap().to_degrees() - 63.435).abs() < 1e-3);
        assert!((brewster_angle(2.0, 2.0).unwrap() - PI / 4.0).abs() < 1e-15);
        assert!((critical_angle(11.7, 1.0).unwrap().unwrap().to_degrees() - 17.0).abs() < 0.1);
        assert_eq!(critical_angle(1.0, 11.7).unwrap(), None);
        assert_eq!(critical_angle(3.0, 3.0).unwrap(), None);
        let water = critical_angle(1.75, 1.0).unwrap().unwrap();
        assert!((water.to_degrees() - 49.107).abs() < 1e-3);
        assert!((5.0 / water.tan() - 4.33).abs() < 0.01);
        assert!(brewster_angle(0.0, 1.0).is_err());
    }

    #[test]
    fn brewster_zeroes_parallel() {
        let i = iface(Medium::vacuum(), diel(3.0));
        let o = oblique(&i, PI / 3.0).unwrap();
        assert!(o.rho_par.norm() < 1e-12);
        assert!((o.rho_perp.re + 0.5).abs() < 1e-12);
        assert!((o.tau_perp.re - 0.5).abs() < 1e-12);
        assert!((o.tau_par.re - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn slab_limits() {
        let z1 = Complex::new(ETA0, 0.0);
        let z2 = Complex::new(ETA0 / 1.6, 0.0);
        let z3 = Complex::new(300.0, 20.0);
        let g = Complex::new(0.0, 10.0);
        let (ze, rho) = slab_equivalent(z1, z2, z3, g, 0.0).unwrap();
        assert!((ze - z3).norm() < 1e-12);
        assert!((rho - (z3 - z1) / (z3 + z1)).norm() < 1e-15);
        let (ze, _) = slab_equivalent(z1, z2, z3, Complex::new(1.0, 10.0), 100.0).unwrap();
        assert!((ze - z2).norm() < 1e-12);
        let (ze, _) = slab_equivalent(z1, z2, z3, g, PI / 10.0).unwrap();
        assert!((ze - z3).norm() < 1e-9);
        assert!(slab_equivalent(z1, z2, z3, g, -1.0).is_err());
    }

    #[test]
    fn slab_through_matched() {
        let z = Complex::new(50.0, 0.0);
        let (r, db) = slab_through(z, z, z, Complex::new(0.0, 3.0), 2.0).unwrap();
        assert!((r.norm() - 1.0).abs() < 1e-15 && db.abs() < 1e-12);
    }

    #[test]
    fn antireflection() {
        let (e, d) = antireflection_layer(4.0, 2.25, 1.0).unwrap();
        assert!((e - 3.0).abs() < 1e-15);
        assert!((d - 0.25 / 3f64.sqrt()).abs() < 1e-15);
        let (e, d) = antireflection_layer(2.56, 1.0, 0.52e-6).unwrap();
        assert!((e - 1.6).abs() < 1e-15);
        assert!((d - 0.1028e-6).abs() < 5e-11);
    }

    #[test]
    fn stack_matches_single_slab() {
        let stack = SlabStack { front: Medium::vacuum(), layers: vec![(diel(2.56), 0.01)], back: Medium::vacuum() };
        let (ze, rho) = stack.input(3e9).unwrap();
        let w = wave_params(&diel(2.56), 3e9).unwrap();
        let z0 = Complex::new(ETA0, 0.0);
        let (ze2, rho2) = slab_equivalent(z0, w.eta, z0, w.gamma(), 0.01).unwrap();
        assert!((ze - ze2).norm() < 1e-12 && (rho - rho2).norm() < 1e-15);
    }
}
