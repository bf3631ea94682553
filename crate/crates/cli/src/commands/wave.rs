//! `wave`: plane-wave media, polarization, Doppler and oblique directions.

use std::f64::consts::PI;

use clap::{Args, Subcommand, ValueEnum};
use emwave::constants::C0;
use emwave::planewave::{
    classify_polarization, direction_from_axis_wavelengths, directional_components, doppler_acoustic, doppler_em,
    doppler_em_speed, loss_metrics, wave_params, DirectionCosines, Handedness, Medium, Motion, Polarization,
    PolarizationSpec, DEFAULT_POLARIZATION_TOL,
};
use serde_json::Value;

use crate::args;
use crate::output::{document, num, only, validation, CliResult, Format, Obj, Payload};

#[derive(Debug, Subcommand)]
pub enum WaveCmd {
    /// Propagation constants, impedance and losses of a medium.
    Medium(MediumArgs),
    /// Polarization state from component amplitudes and phase.
    Polarization(PolarizationArgs),
    /// Radar Doppler shift, or target speed from a measured shift.
    Doppler(DopplerArgs),
    /// Acoustic Doppler with moving source and observer.
    Acoustic(AcousticArgs),
    /// Per-axis phase constants for an oblique direction.
    Direction(DirectionArgs),
    /// Direction implied by wavelengths measured along x and y.
    AxisWavelengths(AxisArgs),
}

#[derive(Debug, Args)]
pub struct MediumArgs {
    /// Real relative permittivity.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps_r: f64,
    /// Loss part ε″ of the relative permittivity.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    eps_i: f64,
    /// Real relative permeability.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    mu_r: f64,
    /// Loss part μ″ of the relative permeability.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    mu_i: f64,
    /// Conductivity, S/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::siemens, default_value = "0")]
    sigma: f64,
    /// Allow ε′ < 1.
    #[arg(long)]
    exotic: bool,
    /// Frequency.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
    /// RMS field amplitude for the dissipated power density, V/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    e_rms: Option<f64>,
    /// Depth for the attenuation figures.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    depth: Option<f64>,
}

#[derive(Debug, Args)]
pub struct PolarizationArgs {
    /// Amplitude along x.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    e1: f64,
    /// Amplitude along y.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    e2: f64,
    /// Phase of y relative to x.
    #[arg(long, allow_hyphen_values = true, value_parser = args::angle)]
    delta: f64,
    /// Relative classification tolerance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value_t = DEFAULT_POLARIZATION_TOL)]
    tol: f64,
}

#[derive(Debug, Args)]
pub struct DopplerArgs {
    /// Transmitted frequency.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f0: f64,
    /// Radial speed, m/s, positive when approaching.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, required_unless_present = "shift", conflicts_with = "shift")]
    v_r: Option<f64>,
    /// Measured frequency shift.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    shift: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MotionArg {
    Approaching,
    Receding,
}

impl From<MotionArg> for Motion {
    fn from(m: MotionArg) -> Self {
        match m {
            MotionArg::Approaching => Motion::Approaching,
            MotionArg::Receding => Motion::Receding,
        }
    }
}

#[derive(Debug, Args)]
pub struct AcousticArgs {
    /// Emitted frequency.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    fs: f64,
    /// Wave speed, m/s.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    v: f64,
    /// Source speed, m/s.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    v_source: f64,
    /// Observer speed, m/s.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    v_observer: f64,
    #[arg(long, value_enum, default_value = "approaching")]
    source: MotionArg,
    #[arg(long, value_enum, default_value = "approaching")]
    observer: MotionArg,
}

#[derive(Debug, Args)]
pub struct DirectionArgs {
    /// Frequency.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
    /// Relative permittivity of the lossless medium.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps_r: f64,
    /// Propagation direction `x,y,z`, normalized internally.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, value_delimiter = ',', allow_hyphen_values = true)]
    dir: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct AxisArgs {
    /// Wavelength along the direction of propagation.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    lambda: f64,
    /// Wavelength measured along x.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    lambda_x: f64,
    /// Wavelength measured along y.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    lambda_y: f64,
}

fn handedness(h: Handedness) -> &'static str {
    match h {
        Handedness::Left => "left",
        Handedness::Right => "right",
    }
}

fn opt(v: Option<f64>) -> Value {
    v.map_or(Value::Null, num)
}

pub fn run(cmd: &WaveCmd, format: Option<Format>) -> CliResult<Payload> {
    only(format.unwrap_or(Format::Json), &[Format::Json])?;
    match cmd {
        WaveCmd::Medium(a) => {
            let build = if a.exotic { Medium::exotic } else { Medium::new };
            let m = build(a.eps_r, a.eps_i, a.mu_r, a.mu_i, a.sigma)?;
            let w = wave_params(&m, a.f)?;
            let (tan_delta, p_d) = loss_metrics(&m, a.f, a.e_rms.unwrap_or(0.0))?;
            let mut results = Obj::new()
                .n("alpha", w.alpha)
                .n("beta", w.beta)
                .c("gamma", w.gamma())
                .c("eta", w.eta)
                .n("delta", w.delta)
                .n("lambda", w.lambda)
                .n("v_p", w.v_p)
                .n("tan_delta", tan_delta)
                .c("eps_c", m.eps_c(a.f));
            if a.e_rms.is_some() {
                results = results.n("p_d", p_d);
            }
            if let Some(d) = a.depth {
                results = results.n("attenuation_db", w.attenuation_db(d)).n("power_fraction", w.power_fraction(d));
            }
            let inputs = Obj::new()
                .n("eps_r", a.eps_r)
                .n("eps_i", a.eps_i)
                .n("mu_r", a.mu_r)
                .n("mu_i", a.mu_i)
                .n("sigma", a.sigma)
                .n("f", a.f)
                .set("e_rms", opt(a.e_rms))
                .set("depth", opt(a.depth));
            Ok(document("wave medium", inputs, results))
        }
        WaveCmd::Polarization(a) => {
            let p = classify_polarization(PolarizationSpec { e1: a.e1, e2: a.e2, delta_phase: a.delta }, a.tol)?;
            let results = match p {
                Polarization::Linear { angle } => Obj::new().set("kind", "linear").angle("angle", angle),
                Polarization::Circular { handedness: h } => {
                    Obj::new().set("kind", "circular").set("handedness", handedness(h))
                }
                Polarization::Elliptical { handedness: h, tilt, major, minor } => Obj::new()
                    .set("kind", "elliptical")
                    .set("handedness", handedness(h))
                    .angle("tilt", tilt)
                    .n("major", major)
                    .n("minor", minor)
                    .n("axial_ratio", major / minor),
            };
            let inputs = Obj::new().n("e1", a.e1).n("e2", a.e2).angle("delta", a.delta).n("tol", a.tol);
            Ok(document("wave polarization", inputs, results))
        }
        WaveCmd::Doppler(a) => {
            let (inputs, results) = match (a.v_r, a.shift) {
                (Some(v), _) => (Obj::new().n("f0", a.f0).n("v_r", v), Obj::new().n("shift", doppler_em(v, a.f0))),
                (None, Some(df)) => {
                    (Obj::new().n("f0", a.f0).n("shift", df), Obj::new().n("v_r", doppler_em_speed(df, a.f0)))
                }
                (None, None) => return Err(validation("give --v-r or --shift")),
            };
            Ok(document("wave doppler", inputs, results))
        }
        WaveCmd::Acoustic(a) => {
            let f = doppler_acoustic(a.fs, a.v, a.v_source, a.v_observer, a.source.into(), a.observer.into())?;
            let inputs = Obj::new()
                .n("fs", a.fs)
                .n("v", a.v)
                .n("v_source", a.v_source)
                .n("v_observer", a.v_observer)
                .set("source", format!("{:?}", a.source).to_lowercase())
                .set("observer", format!("{:?}", a.observer).to_lowercase());
            Ok(document("wave acoustic", inputs, Obj::new().n("f_observed", f).n("shift", f - a.fs)))
        }
        WaveCmd::Direction(a) => {
            if !(a.eps_r > 0.0) {
                return Err(validation("--eps-r must be positive"));
            }
            if a.dir.len() != 3 {
                return Err(validation("--dir takes three components x,y,z"));
            }
            let dir = DirectionCosines::from_vector(a.dir[0], a.dir[1], a.dir[2])?;
            let beta = 2.0 * PI * a.f * a.eps_r.sqrt() / C0;
            let comps = directional_components(beta, dir, a.f)?;
            let axes: Vec<Value> = ["x", "y", "z"]
                .iter()
                .zip(comps.iter())
                .map(|(axis, c)| {
                    Obj::new().set("axis", *axis).n("beta", c.beta).set("lambda", opt(c.lambda)).set("v_p", opt(c.v_p)).value()
                })
                .collect();
            let cos = dir.as_array().iter().map(|c| num(*c)).collect();
            let inputs = Obj::new().n("f", a.f).n("eps_r", a.eps_r).set("dir", a.dir.iter().map(|c| num(*c)).collect::<Vec<_>>());
            let results = Obj::new().n("beta", beta).set("cosines", Value::Array(cos)).set("axes", Value::Array(axes));
            Ok(document("wave direction", inputs, results))
        }
        WaveCmd::AxisWavelengths(a) => {
            let (lz, dir) = direction_from_axis_wavelengths(a.lambda, a.lambda_x, a.lambda_y)?;
            let inputs = Obj::new().n("lambda", a.lambda).n("lambda_x", a.lambda_x).n("lambda_y", a.lambda_y);
            let mut results = Obj::new().n("lambda_z", lz);
            for (k, c) in [("cos_a", dir.cos_a), ("cos_b", dir.cos_b), ("cos_c", dir.cos_c)] {
                results = results.n(k, c);
            }
            let angles = dir.as_array().map(f64::acos);
            results = results.angle("angle_x", angles[0]).angle("angle_y", angles[1]).angle("angle_z", angles[2]);
            Ok(document("wave axis-wavelengths", inputs, results))
        }
    }
}
