//! `match`: single-stub and quarter-wave matching.

use clap::{Args, ValueEnum};
use emwave::linestate::quarter_wave_z;
use emwave::matcher::{solve_stub, verify_match, StubConfig, StubEnd, Topology};
use emwave::Complex;
use serde_json::Value;

use super::need;
use crate::args;
use crate::output::{cx, document, only, validation, CliResult, Format, Obj, Payload};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TopologyArg {
    Series,
    Shunt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StubArg {
    Short,
    Open,
}

impl From<TopologyArg> for Topology {
    fn from(t: TopologyArg) -> Self {
        match t {
            TopologyArg::Series => Topology::Series,
            TopologyArg::Shunt => Topology::Shunt,
        }
    }
}

impl From<StubArg> for StubEnd {
    fn from(s: StubArg) -> Self {
        match s {
            StubArg::Short => StubEnd::Short,
            StubArg::Open => StubEnd::Open,
        }
    }
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    /// Stub connection.
    #[arg(long, value_enum)]
    topology: Option<TopologyArg>,
    /// Stub termination.
    #[arg(long, value_enum)]
    stub: Option<StubArg>,
    /// Load impedance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::complex)]
    zl: Complex,
    /// Line characteristic impedance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::ohms, default_value = "50")]
    z0: f64,
    /// Stub impedance over Z0.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    k: f64,
    /// Quarter-wave transformer impedance for a resistive load instead.
    #[arg(long)]
    quarter_wave: bool,
}

/// Stub solutions with their residual mismatch.
pub fn solutions(zl: Complex, z0: f64, cfg: StubConfig) -> CliResult<Value> {
    let sols = solve_stub(zl, z0, cfg)?;
    let mut out = Vec::new();
    for s in sols {
        let residual = verify_match(zl, z0, cfg, s)?;
        out.push(Obj::new().n("d1", s.d1).n("d2", s.d2).n("residual", residual).value());
    }
    Ok(Value::Array(out))
}

pub fn run(a: &MatchArgs, format: Option<Format>) -> CliResult<Payload> {
    only(format.unwrap_or(Format::Json), &[Format::Json])?;
    let inputs = Obj::new().set("zl", cx(a.zl)).n("z0", a.z0);
    if a.quarter_wave {
        if a.zl.im != 0.0 {
            return Err(validation("a quarter-wave transformer needs a resistive --zl"));
        }
        let z = quarter_wave_z(a.z0, a.zl.re)?;
        return Ok(document("match quarter-wave", inputs, Obj::new().n("z_transformer", z).n("length", 0.25)));
    }
    let topology = need(a.topology, "--topology")?;
    let stub = need(a.stub, "--stub")?;
    let cfg = StubConfig::new(topology.into(), stub.into()).with_k(a.k);
    let inputs = inputs
        .set("topology", format!("{topology:?}").to_lowercase())
        .set("stub", format!("{stub:?}").to_lowercase())
        .n("k", a.k);
    Ok(document(
        "match",
        inputs,
        Obj::new().set("units", "wavelengths").set("solutions", solutions(a.zl, a.z0, cfg)?),
    ))
}
