//! `smith`: Γ-plane arithmetic and chart rendering.

use clap::Args;
use emwave::matcher::{solve_stub, StubConfig};
use emwave::smithchart::{
    gamma_from_z, r_max, render_chart, rotate_toward_generator, z_from_gamma, ChartAnnotation, ChartArc, GammaPoint,
    Grid,
};
use emwave::Complex;

use super::matching::{solutions, StubArg, TopologyArg};
use crate::args;
use crate::output::{cx, document, only, polar, validation, CliResult, Format, Obj, Payload};

#[derive(Debug, Args)]
pub struct SmithArgs {
    /// Load impedance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::complex)]
    zl: Complex,
    /// Reference impedance.
    #[arg(long, allow_hyphen_values = true, value_parser = args::ohms, default_value = "50")]
    z0: f64,
    /// Walk toward the generator by this many wavelengths.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    rotate: Option<f64>,
    /// Annotate stub solutions with this connection.
    #[arg(long, value_enum, requires = "stub")]
    topology: Option<TopologyArg>,
    /// Annotate stub solutions with this termination.
    #[arg(long, value_enum, requires = "topology")]
    stub: Option<StubArg>,
    /// Stub impedance over Z0.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    k: f64,
}

fn label(prefix: &str, x: f64) -> String {
    format!("{prefix} {x:.4}λ")
}

pub fn run(a: &SmithArgs, format: Option<Format>) -> CliResult<Payload> {
    let format = only(format.unwrap_or(Format::Svg), &[Format::Svg, Format::Json])?;
    if !(a.z0 > 0.0) || !a.z0.is_finite() {
        return Err(validation("--z0 must be positive"));
    }
    let z = a.zl / a.z0;
    let g = gamma_from_z(z)?;
    let mut ann = ChartAnnotation::default();
    ann.points.push((GammaPoint::new(g)?, "zL".into()));
    if g.norm() > 0.0 {
        ann.swr_circles.push(g.norm());
    }
    let mut results = Obj::new().c("z_normalized", z).set("gamma", polar(g)).n("swr", r_max(g));
    if let Some(dl) = a.rotate {
        let gr = rotate_toward_generator(g, dl);
        ann.arcs.push(ChartArc { start: g, sweep: dl.rem_euclid(0.5), label: label("l", dl) });
        ann.points.push((GammaPoint::new(gr)?, "z(l)".into()));
        let zr = z_from_gamma(gr).map(|zn| cx(zn * a.z0)).unwrap_or_else(|_| "open".into());
        results = results.set("gamma_rotated", polar(gr)).set("z_rotated", zr);
    }
    let mut inputs = Obj::new().c("zl", a.zl).n("z0", a.z0);
    if let Some(dl) = a.rotate {
        inputs = inputs.n("rotate", dl);
    }
    if let (Some(t), Some(s)) = (a.topology, a.stub) {
        let cfg = StubConfig::new(t.into(), s.into()).with_k(a.k);
        for (i, sol) in solve_stub(a.zl, a.z0, cfg)?.iter().enumerate() {
            let tag = i + 1;
            ann.arcs.push(ChartArc { start: g, sweep: sol.d1, label: label(&format!("d1({tag})"), sol.d1) });
            let at = rotate_toward_generator(g, sol.d1);
            ann.points.push((GammaPoint::new(at)?, format!("stub {tag}, d2 {:.4}λ", sol.d2)));
        }
        inputs = inputs
            .set("topology", format!("{t:?}").to_lowercase())
            .set("stub", format!("{s:?}").to_lowercase())
            .n("k", a.k);
        results = results.set("solutions", solutions(a.zl, a.z0, cfg)?);
    }
    match format {
        Format::Svg => Ok(Payload::Text(render_chart(&ann, &Grid::default())?)),
        _ => Ok(document("smith", inputs, results)),
    }
}
