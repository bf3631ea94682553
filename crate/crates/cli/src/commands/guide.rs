//! `guide`: rectangular, circular, parallel-plate and coaxial guides.

use clap::{Args, Subcommand, ValueEnum};
use emwave::guides::{
    circular_params, coax_tem, mode_census, parallel_plate, peak_e_field, power_to_c, rect_attenuation, rect_cutoff,
    rect_dims_for_cutoffs, rect_mode_params, te10_power, Dispersion, ModeFamily, ModeId, ModeParams, RectGuide,
    RootSource,
};
use emwave::planewave::Medium;
use serde_json::Value;

use crate::args;
use crate::output::{csv_table, document, num, only, validation, CliResult, Format, Obj, Payload};

#[derive(Debug, Subcommand)]
pub enum GuideCmd {
    /// Rectangular guide: one mode, or the census of propagating modes.
    Rect(RectArgs),
    /// Circular guide from the tabulated or refined Bessel roots.
    Circular(CircularArgs),
    /// Parallel-plate guide.
    Pp(PlateArgs),
    /// Coaxial line, TEM mode.
    Coax(CoaxArgs),
    /// Rectangular dimensions for given TE10 and TE01 cutoffs.
    Dims(DimsArgs),
}

#[derive(Debug, Args)]
pub struct Fill {
    /// Relative permittivity of the fill.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps_r: f64,
    /// Loss part ε″ of the fill permittivity.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    eps_i: f64,
    /// Fill conductivity, S/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::siemens, default_value = "0")]
    sigma_fill: f64,
    /// Wall conductivity, S/m; lossless walls when omitted.
    #[arg(long, allow_hyphen_values = true, value_parser = args::siemens)]
    sigma_wall: Option<f64>,
}

impl Fill {
    fn medium(&self) -> CliResult<Medium> {
        Ok(Medium::new(self.eps_r, self.eps_i, 1.0, 0.0, self.sigma_fill)?)
    }

    fn inputs(&self, o: Obj) -> Obj {
        o.n("eps_r", self.eps_r)
            .n("eps_i", self.eps_i)
            .n("sigma_fill", self.sigma_fill)
            .set("sigma_wall", self.sigma_wall.map_or(Value::Null, num))
    }
}

#[derive(Debug, Args)]
pub struct RectArgs {
    /// Broad wall.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    a: f64,
    /// Narrow wall.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    b: f64,
    #[command(flatten)]
    fill: Fill,
    /// Operating frequency.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
    /// Mode, e.g. TE10 or TM11.
    #[arg(long, allow_hyphen_values = true, value_parser = args::mode, default_value = "TE10")]
    mode: ModeId,
    /// List every mode propagating at `--f`.
    #[arg(long)]
    census: bool,
    /// Largest mode index searched by the census.
    #[arg(long, default_value_t = 10)]
    max_index: u32,
    /// Transmitted power, W, for the TE10 field amplitude.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    power: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RootArg {
    Table,
    TableOrRefined,
    Refined,
}

#[derive(Debug, Args)]
pub struct CircularArgs {
    /// Radius.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    r0: f64,
    #[command(flatten)]
    fill: Fill,
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::mode, default_value = "TE11")]
    mode: ModeId,
    /// Source of the Bessel root.
    #[arg(long, value_enum, default_value = "table")]
    roots: RootArg,
}

#[derive(Debug, Args)]
pub struct PlateArgs {
    /// Plate separation.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    a: f64,
    #[command(flatten)]
    fill: Fill,
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
    /// TEM, TEm or TMm.
    #[arg(long, allow_hyphen_values = true, value_parser = args::mode, default_value = "TEM")]
    mode: ModeId,
}

#[derive(Debug, Args)]
pub struct CoaxArgs {
    /// Inner conductor radius.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    a: f64,
    /// Outer conductor radius.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    b: f64,
    #[command(flatten)]
    fill: Fill,
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    /// TE10 cutoff.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f10: f64,
    /// TE01 cutoff.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f01: f64,
    #[command(flatten)]
    fill: Fill,
}

fn family(f: ModeFamily) -> &'static str {
    match f {
        ModeFamily::TE => "TE",
        ModeFamily::TM => "TM",
        ModeFamily::TEM => "TEM",
    }
}

fn params(p: &ModeParams) -> Obj {
    let o = Obj::new().n("f_c", p.f_c).set("propagating", p.is_propagating());
    let o = match p.dispersion {
        Dispersion::Propagating { beta } => o.n("beta", beta).n("alpha", 0.0),
        Dispersion::Cutoff { alpha } => o.n("beta", 0.0).n("alpha", alpha),
    };
    o.n("lambda_g", p.lambda_g).n("v_p", p.v_p).n("v_g", p.v_g).c("z_wave", p.z_wave)
}

pub fn run(cmd: &GuideCmd, format: Option<Format>) -> CliResult<Payload> {
    match cmd {
        GuideCmd::Rect(a) if a.census => census(a, format),
        GuideCmd::Rect(a) => {
            only(format.unwrap_or(Format::Json), &[Format::Json])?;
            let g = RectGuide::new(a.a, a.b, a.fill.medium()?, a.fill.sigma_wall)?;
            let p = rect_mode_params(&g, a.mode, a.f)?;
            let mut results = params(&p).set("mode", a.mode.to_string());
            let te10 = a.mode == ModeId::te(1, 0);
            if a.power.is_some() && !te10 {
                return Err(validation("--power applies to the TE10 mode"));
            }
            if let Some(power) = a.power {
                let c = power_to_c(&g, a.f, power)?;
                results = results
                    .n("c_amp", c)
                    .n("peak_e", peak_e_field(&g, a.f, c)?)
                    .n("power_check", te10_power(&g, a.f, c)?);
            }
            if te10 && p.is_propagating() {
                let (ad, am) = rect_attenuation(&g, a.f)?;
                results = results.n("alpha_d", ad).n("alpha_m", am);
            }
            let inputs = a.fill.inputs(Obj::new().n("a", a.a).n("b", a.b)).n("f", a.f).set("mode", a.mode.to_string());
            Ok(document("guide rect", inputs, results))
        }
        GuideCmd::Circular(a) => {
            only(format.unwrap_or(Format::Json), &[Format::Json])?;
            let roots = match a.roots {
                RootArg::Table => RootSource::Table,
                RootArg::TableOrRefined => RootSource::TableOrRefined,
                RootArg::Refined => RootSource::Refined,
            };
            let p = circular_params(a.r0, a.mode, a.f, &a.fill.medium()?, roots)?;
            let inputs = a
                .fill
                .inputs(Obj::new().n("r0", a.r0))
                .n("f", a.f)
                .set("mode", a.mode.to_string())
                .set("roots", format!("{:?}", a.roots).to_lowercase());
            Ok(document("guide circular", inputs, params(&p).set("mode", a.mode.to_string())))
        }
        GuideCmd::Pp(a) => {
            only(format.unwrap_or(Format::Json), &[Format::Json])?;
            let (p, ac, ad) = parallel_plate(a.a, a.mode, a.f, &a.fill.medium()?, a.fill.sigma_wall)?;
            let inputs = a.fill.inputs(Obj::new().n("a", a.a)).n("f", a.f).set("mode", a.mode.to_string());
            Ok(document("guide pp", inputs, params(&p).n("alpha_c", ac).n("alpha_d", ad)))
        }
        GuideCmd::Coax(a) => {
            only(format.unwrap_or(Format::Json), &[Format::Json])?;
            let (z0, ac, ad) = coax_tem(a.a, a.b, &a.fill.medium()?, a.fill.sigma_wall, a.f)?;
            let inputs = a.fill.inputs(Obj::new().n("a", a.a).n("b", a.b)).n("f", a.f);
            Ok(document("guide coax", inputs, Obj::new().n("z0", z0).n("alpha_c", ac).n("alpha_d", ad)))
        }
        GuideCmd::Dims(a) => {
            only(format.unwrap_or(Format::Json), &[Format::Json])?;
            let (ga, gb) = rect_dims_for_cutoffs(a.f10, a.f01, &a.fill.medium()?)?;
            let inputs = a.fill.inputs(Obj::new().n("f10", a.f10).n("f01", a.f01));
            Ok(document("guide dims", inputs, Obj::new().n("a", ga).n("b", gb)))
        }
    }
}

fn census(a: &RectArgs, format: Option<Format>) -> CliResult<Payload> {
    let format = only(format.unwrap_or(Format::Csv), &[Format::Csv, Format::Json])?;
    let g = RectGuide::new(a.a, a.b, a.fill.medium()?, a.fill.sigma_wall)?;
    let modes = mode_census(&g, a.f, a.max_index)?;
    if format == Format::Csv {
        let rows = modes
            .iter()
            .map(|(m, fc)| vec![family(m.family).to_string(), m.m.to_string(), m.n.to_string(), fc.to_string()]);
        return csv_table(&["family", "m", "n", "fc_hz"], rows);
    }
    let list: Vec<Value> = modes
        .iter()
        .map(|(m, fc)| Obj::new().set("mode", m.to_string()).n("fc_hz", *fc).value())
        .collect();
    let fc10 = rect_cutoff(&g, ModeId::te(1, 0))?;
    let inputs = a.fill.inputs(Obj::new().n("a", a.a).n("b", a.b)).n("f", a.f).set("max_index", a.max_index);
    Ok(document("guide rect census", inputs, Obj::new().n("fc_te10", fc10).set("modes", Value::Array(list))))
}
