//! Steady-state line analysis: reflection coefficient, impedance
//! transformation, standing-wave ratio and extrema, load extraction from
//! slotted-line data, and power flow.

use std::f64::consts::PI;

use crate::error::{invalid, Error, Result};
use crate::lineparams::PropagationConstant;
use crate::Complex;

/// Threshold below which a numerator or denominator is treated as a zero of
/// the impedance transformation.
const POLE_EPS: f64 = 1e-12;

/// Load at the end of a line. Short and open circuits are exact variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Termination {
    /// `ZL = 0`.
    Short,
    /// `ZL = ∞`.
    Open,
    /// Finite load impedance, Ω.
    Load(Complex),
}

impl Termination {
    /// The finite impedance, `None` for an open circuit.
    pub fn impedance(&self) -> Option<Complex> {
        match *self {
            Termination::Short => Some(Complex::new(0.0, 0.0)),
            Termination::Open => None,
            Termination::Load(z) => Some(z),
        }
    }

    /// The admittance, `None` for a short circuit.
    pub fn admittance(&self) -> Option<Complex> {
        match *self {
            Termination::Short => None,
            Termination::Open => Some(Complex::new(0.0, 0.0)),
            Termination::Load(z) if z == Complex::new(0.0, 0.0) => None,
            Termination::Load(z) => Some(z.inv()),
        }
    }

    fn check(&self) -> Result<()> {
        if let Termination::Load(z) = self {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(invalid("load impedance must be finite"));
            }
            if z.re < 0.0 {
                return Err(invalid("load resistance must be non-negative"));
            }
        }
        Ok(())
    }
}

/// Reflection coefficient together with the standing-wave ratio and the
/// phase of `ρ` at the load.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionState {
    /// Reflection coefficient at the load.
    pub rho: Complex,
    /// `(1+|ρ|)/(1−|ρ|)`, infinite when `|ρ| = 1`.
    pub swr: f64,
    /// Phase of `ρ`, rad.
    pub phi_l: f64,
}

/// Reflection coefficient `(ZL − Z0)/(ZL + Z0)` of a termination.
pub fn reflection_coefficient(load: Termination, z0: Complex) -> Result<Complex> {
    load.check()?;
    if z0 == Complex::new(0.0, 0.0) {
        return Err(invalid("characteristic impedance must be non-zero"));
    }
    match load {
        Termination::Short => Ok(Complex::new(-1.0, 0.0)),
        Termination::Open => Ok(Complex::new(1.0, 0.0)),
        Termination::Load(z) => {
            let den = z + z0;
            if den.norm() <= POLE_EPS * z0.norm() {
                return Err(Error::Degenerate("load impedance equals -Z0".into()));
            }
            Ok((z - z0) / den)
        }
    }
}

/// Reflection coefficient, standing-wave ratio and load phase.
pub fn reflection_state(load: Termination, z0: Complex) -> Result<ReflectionState> {
    let rho = reflection_coefficient(load, z0)?;
    Ok(ReflectionState { rho, swr: swr_from_rho(rho.norm()), phi_l: rho.arg() })
}

/// Standing-wave ratio for a reflection magnitude.
pub fn swr_from_rho(mag: f64) -> f64 {
    if mag >= 1.0 {
        f64::INFINITY
    } else {
        (1.0 + mag) / (1.0 - mag)
    }
}

/// Input impedance of a line of length `d` terminated by `load`.
///
/// The hyperbolic form reduces to the tangent form for lossless lines. A
/// vanishing numerator or denominator yields [`Termination::Short`] or
/// [`Termination::Open`] instead of a numeric zero or infinity.
pub fn input_impedance(
    load: Termination,
    z0: Complex,
    gamma: PropagationConstant,
    d: f64,
) -> Result<Termination> {
    load.check()?;
    if !(d >= 0.0) || !d.is_finite() {
        return Err(invalid("line length must be finite and non-negative"));
    }
    if z0 == Complex::new(0.0, 0.0) {
        return Err(invalid("characteristic impedance must be non-zero"));
    }
    let e = (-2.0 * gamma.gamma() * d).exp();
    let ch = (1.0 + e) * 0.5;
    let sh = (1.0 - e) * 0.5;
    let (p, q) = match load {
        Termination::Short => (sh, ch),
        Termination::Open => (ch, sh),
        Termination::Load(zl) => (zl * ch + z0 * sh, z0 * ch + zl * sh),
    };
    if q.norm() <= POLE_EPS * p.norm() {
        return Ok(Termination::Open);
    }
    if p.norm() <= POLE_EPS * q.norm() {
        return Ok(Termination::Short);
    }
    Ok(Termination::Load(z0 * p / q))
}

/// Standing-wave ratio and extrema positions on a lossless line.
#[derive(Debug, Clone, PartialEq)]
pub struct StandingWave {
    /// Standing-wave ratio, infinite for total reflection.
    pub swr: f64,
    /// Voltage maxima, m from the load, ascending in `[0, λ)`.
    pub d_max: Vec<f64>,
    /// Voltage minima, m from the load, ascending in `[0, λ)`.
    pub d_min: Vec<f64>,
}

impl StandingWave {
    /// True when `|ρ| = 1`.
    pub fn is_total_reflection(&self) -> bool {
        self.swr.is_infinite()
    }
}

/// Standing-wave ratio and voltage extrema for load reflection `rho_l`.
///
/// A matched load has no extrema and both lists are empty.
pub fn standing_wave(rho_l: Complex, lambda: f64) -> Result<StandingWave> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(invalid("wavelength must be positive"));
    }
    let mag = rho_l.norm();
    if mag > 1.0 + 1e-12 {
        return Err(invalid("reflection magnitude exceeds one"));
    }
    let swr = swr_from_rho(mag);
    if mag == 0.0 {
        return Ok(StandingWave { swr, d_max: vec![], d_min: vec![] });
    }
    let base = (rho_l.arg() / (4.0 * PI)).rem_euclid(0.5);
    let first_min = (base + 0.25).rem_euclid(0.5);
    let pair = |x: f64| vec![x * lambda, (x + 0.5) * lambda];
    Ok(StandingWave { swr, d_max: pair(base), d_min: pair(first_min) })
}

/// Load impedance from a measured standing-wave ratio and the distance of
/// the first voltage minimum from the load.
pub fn load_from_measurements(swr: f64, d_min: f64, lambda: f64, z0: f64) -> Result<Complex> {
    if !(swr >= 1.0) || !swr.is_finite() {
        return Err(invalid("standing-wave ratio must be finite and at least one"));
    }
    if !(lambda > 0.0) || !(z0 > 0.0) {
        return Err(invalid("wavelength and impedance must be positive"));
    }
    if !(d_min >= 0.0) || d_min >= lambda / 2.0 {
        return Err(invalid("first minimum must lie in [0, λ/2)"));
    }
    let bd = 2.0 * PI * d_min / lambda;
    let (s, c) = bd.sin_cos();
    let num = Complex::new(c, -swr * s);
    let den = Complex::new(swr * c, -s);
    Ok(z0 * num / den)
}

/// Line constants recovered from open- and short-circuit input impedances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OcScLine {
    /// Characteristic impedance, Ω.
    pub z0: Complex,
    /// Propagation constant.
    pub gamma: PropagationConstant,
    /// Wavelength, m.
    pub lambda: f64,
}

/// Characteristic impedance and propagation constant from the input
/// impedances of a length `l` measured open (`z_open`) and shorted
/// (`z_short`).
///
/// The inverse tangent is multivalued; the principal branch is only correct
/// when the line is shorter than a quarter wavelength, which the caller must
/// assert through `within_quarter_wave`.
pub fn line_from_oc_sc(
    z_open: Complex,
    z_short: Complex,
    l: f64,
    within_quarter_wave: bool,
) -> Result<OcScLine> {
    if !(l > 0.0) || !l.is_finite() {
        return Err(invalid("line length must be positive"));
    }
    if !within_quarter_wave {
        return Err(Error::BranchAmbiguity(
            "line length must be declared shorter than a quarter wavelength".into(),
        ));
    }
    if z_open == Complex::new(0.0, 0.0) || z_short == Complex::new(0.0, 0.0) {
        return Err(Error::Degenerate("open and short impedances must be non-zero".into()));
    }
    let z0 = (z_open * z_short).sqrt();
    let t = (z_short / z_open).sqrt();
    let gl = t.atanh();
    let gamma = PropagationConstant { alpha: gl.re / l, beta: gl.im / l };
    Ok(OcScLine { z0, gamma, lambda: gamma.wavelength() })
}

/// Voltages, currents and average powers along a lossless line driven by a
/// source `vg` with internal impedance `zg`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerReport {
    /// Input impedance seen by the source.
    pub z_in: Termination,
    /// Forward wave amplitude referenced to the load.
    pub v_plus: Complex,
    /// Input voltage.
    pub v_i: Complex,
    /// Input current.
    pub i_i: Complex,
    /// Average power entering the line, W.
    pub p_in: f64,
    /// Load voltage.
    pub v_l: Complex,
    /// Load current.
    pub i_l: Complex,
    /// Average power delivered to the load, W.
    pub p_l: f64,
    /// Average power supplied by the ideal source, W.
    pub p_g: f64,
    /// Average power dissipated in the source impedance, W.
    pub p_zg: f64,
}

/// Power flow on a lossless line of `l_over_lambda` wavelengths.
pub fn power_flow(
    vg: Complex,
    zg: Complex,
    z0: f64,
    l_over_lambda: f64,
    load: Termination,
) -> Result<PowerReport> {
    if !(z0 > 0.0) || !z0.is_finite() {
        return Err(invalid("characteristic impedance must be positive"));
    }
    let z0c = Complex::new(z0, 0.0);
    let gamma = PropagationConstant::lossless(2.0 * PI);
    let z_in = input_impedance(load, z0c, gamma, l_over_lambda)?;
    let (v_i, i_i) = match z_in.impedance() {
        None => (vg, Complex::new(0.0, 0.0)),
        Some(zin) => {
            let den = zg + zin;
            if den.norm() == 0.0 {
                return Err(Error::Degenerate("source and input impedances cancel".into()));
            }
            let i = vg / den;
            (i * zin, i)
        }
    };
    let rho = reflection_coefficient(load, z0c)?;
    let bl = 2.0 * PI * l_over_lambda;
    let fwd = Complex::from_polar(1.0, bl);
    let bwd = rho * Complex::from_polar(1.0, -bl);
    let v_den = fwd + bwd;
    let i_den = fwd - bwd;
    let v_plus = if v_den.norm() >= i_den.norm() { v_i / v_den } else { i_i * z0 / i_den };
    let v_l = v_plus * (1.0 + rho);
    let i_l = v_plus * (1.0 - rho) / z0;
    let half_re = |v: Complex, i: Complex| 0.5 * (v * i.conj()).re;
    Ok(PowerReport {
        z_in,
        v_plus,
        v_i,
        i_i,
        p_in: half_re(v_i, i_i),
        v_l,
        i_l,
        p_l: half_re(v_l, i_l),
        p_g: half_re(vg, i_i),
        p_zg: 0.5 * i_i.norm_sqr() * zg.re,
    })
}

/// Impedance of a quarter-wave section matching real `z01` to real `z03`.
pub fn quarter_wave_z(z01: f64, z03: f64) -> Result<f64> {
    if !(z01 > 0.0) || !(z03 > 0.0) || !z01.is_finite() || !z03.is_finite() {
        return Err(invalid("impedances must be positive"));
    }
    Ok((z01 * z03).sqrt())
}
