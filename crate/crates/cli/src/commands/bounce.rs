//! `bounce`: step and pulse transients as CSV or JSON.

use clap::{Args, ValueEnum};
use emwave::constants::C0;
use emwave::linestate::Termination;
use emwave::transient::{bounce, lattice_events, steady_state, Source, TransientSetup};
use serde_json::Value;

use crate::args;
use crate::output::{csv_table, document, num, only, validation, CliResult, Format, Obj, Payload};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Voltage,
    Current,
}

#[derive(Debug, Args)]
pub struct BounceArgs {
    /// Source amplitude, V.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    v0: f64,
    /// Source resistance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::ohms)]
    zg: f64,
    /// Line characteristic impedance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::ohms)]
    z0: f64,
    /// Load: `short`, `open` or a resistance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::termination)]
    zl: Termination,
    /// Line length.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    length: f64,
    /// Propagation velocity, m/s.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, conflicts_with = "eps_r")]
    velocity: Option<f64>,
    /// Relative permittivity of the line dielectric, used when no velocity is given.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    eps_r: Option<f64>,
    /// Pulse width, s; a step when omitted.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    pulse: Option<f64>,
    /// Observation point from the source; the load end by default.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    at: Option<f64>,
    /// End time, s; ten transit times by default.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    t_end: Option<f64>,
    /// Signal written to CSV.
    #[arg(long, value_enum, default_value = "voltage")]
    quantity: Quantity,
}

pub fn run(a: &BounceArgs, format: Option<Format>) -> CliResult<Payload> {
    let format = only(format.unwrap_or(Format::Csv), &[Format::Csv, Format::Json])?;
    let velocity = match (a.velocity, a.eps_r) {
        (Some(v), _) => v,
        (None, Some(e)) if e > 0.0 => C0 / e.sqrt(),
        (None, Some(_)) => return Err(validation("--eps-r must be positive")),
        (None, None) => C0,
    };
    let setup = TransientSetup {
        v0: a.v0,
        zg: a.zg,
        z0: a.z0,
        zl: a.zl,
        length: a.length,
        velocity,
        source: a.pulse.map_or(Source::Step, Source::Pulse),
    };
    let at = a.at.unwrap_or(a.length);
    let t_end = match a.t_end {
        Some(t) => t,
        None if a.length > 0.0 && velocity > 0.0 => 10.0 * a.length / velocity,
        None => return Err(validation("length and velocity must be positive")),
    };
    let (v, i) = bounce(&setup, at, t_end)?;
    let wave = match a.quantity {
        Quantity::Voltage => &v,
        Quantity::Current => &i,
    };
    if format == Format::Csv {
        let rows = wave.breakpoints.iter().map(|(t, x)| vec![t.to_string(), x.to_string()]);
        return csv_table(&["t_seconds", "value"], rows);
    }
    let events: Vec<Value> = lattice_events(&setup, at, t_end)?
        .iter()
        .map(|e| Obj::new().n("time", e.time).set("wave", e.wave).n("dv", e.dv).n("di", e.di).value())
        .collect();
    let series = |w: &emwave::transient::Waveform| {
        Value::Array(w.breakpoints.iter().map(|(t, x)| Value::Array(vec![num(*t), num(*x)])).collect())
    };
    let mut results = Obj::new()
        .n("transit_time", setup.transit_time())
        .n("rho_l", setup.rho_l())
        .n("rho_g", setup.rho_g())
        .n("v1", setup.v1())
        .set("events", Value::Array(events))
        .set("voltage", series(&v))
        .set("current", series(&i));
    if let (Source::Step, Ok((vs, is))) = (setup.source, steady_state(&setup)) {
        results = results.set("steady_state", Obj::new().n("v", vs).n("i", is).value());
    }
    let inputs = Obj::new()
        .n("v0", a.v0)
        .n("zg", a.zg)
        .n("z0", a.z0)
        .set("zl", args::termination_json(a.zl))
        .n("length", a.length)
        .n("velocity", velocity)
        .set("pulse", a.pulse.map_or(Value::Null, num))
        .n("at", at)
        .n("t_end", t_end);
    Ok(document("bounce", inputs, results))
}
