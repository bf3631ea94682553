//! `line`: primary and secondary line constants.

use clap::{Args, Subcommand, ValueEnum};
use emwave::lineparams::{
    geometric_z0, microstrip, secondary_constants, solve_distortionless, LineGeometry, LineModel,
};

use super::need;
use crate::args;
use crate::output::{document, only, CliResult, Format, Obj, Payload};

#[derive(Debug, Subcommand)]
pub enum LineCmd {
    /// Propagation constant and Z0 from R, L, G, C at one frequency.
    Rlgc(RlgcArgs),
    /// R, L, G, C of a distortionless line from α, vp and Z0.
    Distortionless(DistortionlessArgs),
    /// Characteristic impedance from a cross-section.
    Geometry(GeometryArgs),
}

#[derive(Debug, Args)]
pub struct RlgcArgs {
    /// Series resistance, Ω/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::ohms, default_value = "0")]
    r: f64,
    /// Series inductance, H/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    l: f64,
    /// Shunt conductance, S/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::siemens, default_value = "0")]
    g: f64,
    /// Shunt capacitance, F/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    c: f64,
    /// Frequency.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
}

#[derive(Debug, Args)]
pub struct DistortionlessArgs {
    /// Attenuation, Np/m, or dB/m with a `dB` suffix.
    #[arg(long, allow_hyphen_values = true, value_parser = args::attenuation)]
    alpha: f64,
    /// Phase velocity, m/s.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    vp: f64,
    /// Characteristic impedance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::ohms)]
    z0: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Coaxial,
    Bifilar,
    ParallelPlates,
    CollinearPlates,
    WireOverPlane,
    ShieldedPair,
    WireInTrough,
    Elliptic,
    Microstrip,
}

#[derive(Debug, Args)]
pub struct GeometryArgs {
    /// Cross-section type.
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    b: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    c: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    d: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    h: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    s: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    w: Option<f64>,
    /// Strip thickness.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length, default_value = "0")]
    t: f64,
    /// Shield diameter.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    shield_d: Option<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps_r: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    mu_r: f64,
}

pub fn run(cmd: &LineCmd, format: Option<Format>) -> CliResult<Payload> {
    only(format.unwrap_or(Format::Json), &[Format::Json])?;
    match cmd {
        LineCmd::Rlgc(a) => {
            let (pc, z0) = secondary_constants(&LineModel::new(a.r, a.l, a.g, a.c)?, a.f)?;
            Ok(document(
                "line rlgc",
                Obj::new().n("r", a.r).n("l", a.l).n("g", a.g).n("c", a.c).n("f", a.f),
                Obj::new()
                    .n("alpha", pc.alpha)
                    .n("beta", pc.beta)
                    .c("gamma", pc.gamma())
                    .c("z0", z0)
                    .n("wavelength", pc.wavelength())
                    .n("v_p", pc.phase_velocity(a.f)),
            ))
        }
        LineCmd::Distortionless(a) => {
            let m = solve_distortionless(a.alpha, a.vp, a.z0)?;
            Ok(document(
                "line distortionless",
                Obj::new().n("alpha", a.alpha).n("vp", a.vp).n("z0", a.z0),
                Obj::new().n("r", m.r_per_m).n("l", m.l_per_m).n("g", m.g_per_m).n("c", m.c_per_m),
            ))
        }
        LineCmd::Geometry(a) => geometry(a),
    }
}

fn geometry(a: &GeometryArgs) -> CliResult<Payload> {
    let (eps_r, mu_r) = (a.eps_r, a.mu_r);
    let geom = match a.kind {
        Kind::Coaxial => LineGeometry::Coaxial { a: need(a.a, "--a")?, b: need(a.b, "--b")?, eps_r },
        Kind::Bifilar => LineGeometry::Bifilar { d: need(a.d, "--d")?, a: need(a.a, "--a")?, eps_r, mu_r },
        Kind::ParallelPlates => LineGeometry::ParallelPlates { b: need(a.b, "--b")?, w: need(a.w, "--w")?, eps_r, mu_r },
        Kind::CollinearPlates => LineGeometry::CollinearPlates { d: need(a.d, "--d")?, w: need(a.w, "--w")?, eps_r, mu_r },
        Kind::WireOverPlane => LineGeometry::WireOverPlane { h: need(a.h, "--h")?, d: need(a.d, "--d")?, eps_r, mu_r },
        Kind::ShieldedPair => LineGeometry::ShieldedPair {
            s: need(a.s, "--s")?,
            d: need(a.d, "--d")?,
            shield_d: need(a.shield_d, "--shield-d")?,
            eps_r,
            mu_r,
        },
        Kind::WireInTrough => LineGeometry::WireInTrough {
            w: need(a.w, "--w")?,
            h: need(a.h, "--h")?,
            d: need(a.d, "--d")?,
            eps_r,
            mu_r,
        },
        Kind::Elliptic => LineGeometry::EllipticFocal {
            a: need(a.a, "--a")?,
            b: need(a.b, "--b")?,
            c: need(a.c, "--c")?,
            eps_r,
            mu_r,
        },
        Kind::Microstrip => LineGeometry::Microstrip { w: need(a.w, "--w")?, h: need(a.h, "--h")?, thickness: a.t, eps_r },
    };
    let mut inputs = Obj::new().set("kind", format!("{:?}", a.kind).to_lowercase());
    for (k, v) in [("a", a.a), ("b", a.b), ("c", a.c), ("d", a.d), ("h", a.h), ("s", a.s), ("w", a.w), ("shield_d", a.shield_d)] {
        if let Some(v) = v {
            inputs = inputs.n(k, v);
        }
    }
    inputs = inputs.n("t", a.t).n("eps_r", eps_r).n("mu_r", mu_r);
    let mut results = Obj::new().n("z0", geometric_z0(&geom)?);
    if let LineGeometry::Microstrip { w, h, thickness, eps_r } = geom {
        results = results.n("eps_eff", microstrip(w, h, thickness, eps_r)?.0);
    }
    Ok(document("line geometry", inputs, results))
}
