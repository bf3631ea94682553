//! `state`: reflection, impedance transformation, standing waves and power.

use std::f64::consts::PI;

use clap::{Args, ValueEnum};
use emwave::lineparams::PropagationConstant;
use emwave::linestate::{
    input_impedance, load_from_measurements, power_flow, reflection_state, standing_wave, Termination,
};
use emwave::Complex;
use serde_json::Value;

use super::need;
use crate::args;
use crate::output::{document, num, only, polar, validation, CliResult, Format, Obj, Payload};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    /// Load reflection coefficient.
    Rho,
    /// Reflection coefficient, SWR and load phase.
    Swr,
    /// Input impedance a distance `--d` from the load.
    Zin,
    /// Voltage maxima and minima positions.
    Extrema,
    /// Load impedance from SWR and first-minimum position.
    Measure,
    /// Voltages, currents and powers along a driven line.
    Power,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Operation.
    #[arg(long, value_enum, default_value = "swr")]
    op: Op,
    /// Characteristic impedance, `a+bj` allowed.
    #[arg(long, allow_hyphen_values = true, value_parser = args::complex, default_value = "50")]
    z0: Complex,
    /// Load: `short`, `open` or `a+bj`.
    #[arg(long, allow_hyphen_values = true, value_parser = args::termination)]
    zl: Option<Termination>,
    /// Distance from the load.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    d: Option<f64>,
    /// Wavelength on the line; lengths are in wavelengths when left at 1.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length, default_value = "1")]
    lambda: f64,
    /// Line attenuation, Np/m, or dB/m with a `dB` suffix.
    #[arg(long, allow_hyphen_values = true, value_parser = args::attenuation, default_value = "0")]
    alpha: f64,
    /// Measured standing-wave ratio.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    swr: Option<f64>,
    /// Distance of the first voltage minimum from the load.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    d_min: Option<f64>,
    /// Source phasor voltage.
    #[arg(long, allow_hyphen_values = true, value_parser = args::complex)]
    vg: Option<Complex>,
    /// Source impedance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::complex)]
    zg: Option<Complex>,
}

fn real_z0(z0: Complex) -> CliResult<f64> {
    if z0.im != 0.0 {
        return Err(validation("this operation needs a real --z0"));
    }
    Ok(z0.re)
}

fn term(t: Termination) -> Value {
    match t {
        Termination::Short => "short".into(),
        Termination::Open => "open".into(),
        Termination::Load(z) => polar(z),
    }
}

fn positions(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|x| num(*x)).collect())
}

pub fn run(a: &StateArgs, format: Option<Format>) -> CliResult<Payload> {
    only(format.unwrap_or(Format::Json), &[Format::Json])?;
    let mut inputs = Obj::new().set("op", format!("{:?}", a.op).to_lowercase()).c("z0", a.z0);
    if let Some(zl) = a.zl {
        inputs = inputs.set("zl", args::termination_json(zl));
    }
    let results = match a.op {
        Op::Rho => {
            let st = reflection_state(need(a.zl, "--zl")?, a.z0)?;
            Obj::new().set("rho", polar(st.rho))
        }
        Op::Swr => {
            let st = reflection_state(need(a.zl, "--zl")?, a.z0)?;
            Obj::new().set("rho", polar(st.rho)).n("swr", st.swr).angle("phi_l", st.phi_l)
        }
        Op::Zin => {
            let d = need(a.d, "--d")?;
            inputs = inputs.n("d", d).n("lambda", a.lambda).n("alpha", a.alpha);
            let pc = PropagationConstant { alpha: a.alpha, beta: 2.0 * PI / a.lambda };
            let z = input_impedance(need(a.zl, "--zl")?, a.z0, pc, d)?;
            Obj::new().set("z_in", term(z))
        }
        Op::Extrema => {
            inputs = inputs.n("lambda", a.lambda);
            let st = reflection_state(need(a.zl, "--zl")?, a.z0)?;
            let sw = standing_wave(st.rho, a.lambda)?;
            Obj::new().n("swr", sw.swr).set("d_max", positions(&sw.d_max)).set("d_min", positions(&sw.d_min))
        }
        Op::Measure => {
            let (swr, d_min) = (need(a.swr, "--swr")?, need(a.d_min, "--d-min")?);
            inputs = inputs.n("swr", swr).n("d_min", d_min).n("lambda", a.lambda);
            let zl = load_from_measurements(swr, d_min, a.lambda, real_z0(a.z0)?)?;
            Obj::new().set("zl", polar(zl))
        }
        Op::Power => {
            let (vg, zg, d) = (need(a.vg, "--vg")?, need(a.zg, "--zg")?, need(a.d, "--d")?);
            inputs = inputs.c("vg", vg).c("zg", zg).n("d", d).n("lambda", a.lambda);
            let p = power_flow(vg, zg, real_z0(a.z0)?, d / a.lambda, need(a.zl, "--zl")?)?;
            Obj::new()
                .set("z_in", term(p.z_in))
                .set("v_plus", polar(p.v_plus))
                .set("v_in", polar(p.v_i))
                .set("i_in", polar(p.i_i))
                .set("v_load", polar(p.v_l))
                .set("i_load", polar(p.i_l))
                .n("p_in", p.p_in)
                .n("p_load", p.p_l)
                .n("p_source", p.p_g)
                .n("p_zg", p.p_zg)
        }
    };
    Ok(document("state", inputs, results))
}
