//! `boundary`: planar interfaces and slabs.

use clap::{Args, Subcommand};
use emwave::boundary::{
    antireflection_layer, brewster_angle, critical_angle, normal_coeffs, normal_power_split, oblique, slab_equivalent,
    slab_through, standing_wave_surface, Interface, Refraction,
};
use emwave::planewave::{wave_params, Medium};
use serde_json::Value;

use crate::args;
use crate::output::{cx, document, num, only, polar, CliResult, Format, Obj, Payload};

#[derive(Debug, Subcommand)]
pub enum BoundaryCmd {
    /// Normal incidence on the interface between media 1 and 2.
    Normal(NormalArgs),
    /// Oblique incidence, both polarizations.
    Oblique(ObliqueArgs),
    /// Critical and Brewster angles between two lossless dielectrics.
    Angles(AnglesArgs),
    /// Slab of medium 2 and thickness `--d` between media 1 and 3.
    Slab(SlabArgs),
    /// Quarter-wave antireflection layer between two dielectrics.
    Coating(CoatingArgs),
}

#[derive(Debug, Args)]
pub struct TwoMedia {
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps1: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    eps1_i: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    mu1: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    mu1_i: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::siemens, default_value = "0")]
    sigma1: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps2: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    eps2_i: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    mu2: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    mu2_i: f64,
    /// Conductivity of medium 2, S/m; `inf` for a perfect conductor.
    #[arg(long, allow_hyphen_values = true, value_parser = args::siemens, default_value = "0")]
    sigma2: f64,
    /// Frequency.
    #[arg(long, allow_hyphen_values = true, value_parser = args::freq)]
    f: f64,
}

impl TwoMedia {
    fn media(&self) -> CliResult<(Medium, Medium)> {
        let m1 = Medium::new(self.eps1, self.eps1_i, self.mu1, self.mu1_i, self.sigma1)?;
        let m2 = if self.sigma2.is_infinite() {
            Medium::pec()
        } else {
            Medium::new(self.eps2, self.eps2_i, self.mu2, self.mu2_i, self.sigma2)?
        };
        Ok((m1, m2))
    }

    fn interface(&self) -> CliResult<Interface> {
        let (m1, m2) = self.media()?;
        Ok(Interface::new(m1, m2, self.f)?)
    }

    fn inputs(&self) -> Obj {
        Obj::new()
            .n("eps1", self.eps1)
            .n("eps1_i", self.eps1_i)
            .n("mu1", self.mu1)
            .n("mu1_i", self.mu1_i)
            .n("sigma1", self.sigma1)
            .n("eps2", self.eps2)
            .n("eps2_i", self.eps2_i)
            .n("mu2", self.mu2)
            .n("mu2_i", self.mu2_i)
            .n("sigma2", self.sigma2)
            .n("f", self.f)
    }
}

#[derive(Debug, Args)]
pub struct NormalArgs {
    #[command(flatten)]
    media: TwoMedia,
    /// Incident field amplitude for the standing-wave description, V/m.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    e_i: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ObliqueArgs {
    #[command(flatten)]
    media: TwoMedia,
    /// Angle of incidence.
    #[arg(long, allow_hyphen_values = true, value_parser = args::angle)]
    theta: f64,
}

#[derive(Debug, Args)]
pub struct AnglesArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    eps1: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    eps2: f64,
}

#[derive(Debug, Args)]
pub struct SlabArgs {
    #[command(flatten)]
    media: TwoMedia,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps3: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    eps3_i: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    mu3: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "0")]
    mu3_i: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = args::siemens, default_value = "0")]
    sigma3: f64,
    /// Slab thickness.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    d: f64,
}

#[derive(Debug, Args)]
pub struct CoatingArgs {
    /// Relative permittivity of the incident medium.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain, default_value = "1")]
    eps1: f64,
    /// Relative permittivity of the substrate.
    #[arg(long, allow_hyphen_values = true, value_parser = args::plain)]
    eps3: f64,
    /// Free-space design wavelength.
    #[arg(long, allow_hyphen_values = true, value_parser = args::length)]
    lambda0: f64,
}

fn refraction(r: Refraction) -> Obj {
    match r {
        Refraction::Real(t) => Obj::new().set("kind", "real").angle("theta_t", t),
        Refraction::Evanescent => Obj::new().set("kind", "evanescent"),
        Refraction::Complex => Obj::new().set("kind", "complex"),
        Refraction::Opaque => Obj::new().set("kind", "opaque"),
    }
}

pub fn run(cmd: &BoundaryCmd, format: Option<Format>) -> CliResult<Payload> {
    only(format.unwrap_or(Format::Json), &[Format::Json])?;
    match cmd {
        BoundaryCmd::Normal(a) => {
            let iface = a.media.interface()?;
            let (z1, z2) = iface.impedances()?;
            let (rho, tau) = normal_coeffs(&iface)?;
            let (pr, pt) = normal_power_split(&iface)?;
            let mut results = Obj::new()
                .c("z1", z1)
                .c("z2", z2)
                .set("rho", polar(rho))
                .set("tau", polar(tau))
                .n("reflected_fraction", pr)
                .n("transmitted_fraction", pt);
            let mut inputs = a.media.inputs();
            if let Some(e_i) = a.e_i {
                inputs = inputs.n("e_i", e_i);
                let s = standing_wave_surface(e_i, &iface)?;
                results = results
                    .n("beta1", s.beta1)
                    .n("max_field", s.max_field)
                    .set("j_s", s.j_s.map_or(Value::Null, num));
            }
            Ok(document("boundary normal", inputs, results))
        }
        BoundaryCmd::Oblique(a) => {
            let o = oblique(&a.media.interface()?, a.theta)?;
            let results = Obj::new()
                .set("transmission", refraction(o.theta_t).value())
                .c("sin_theta_t", o.sin_theta_t)
                .c("cos_theta_t", o.cos_theta_t)
                .set("rho_perp", polar(o.rho_perp))
                .set("tau_perp", polar(o.tau_perp))
                .set("rho_par", polar(o.rho_par))
                .set("tau_par", polar(o.tau_par));
            Ok(document("boundary oblique", a.media.inputs().angle("theta", a.theta), results))
        }
        BoundaryCmd::Angles(a) => {
            let mut results = Obj::new();
            results = match critical_angle(a.eps1, a.eps2)? {
                Some(t) => results.angle("critical", t),
                None => results.set("critical", Value::Null).set("critical_deg", Value::Null),
            };
            results = results.angle("brewster", brewster_angle(a.eps1, a.eps2)?);
            Ok(document("boundary angles", Obj::new().n("eps1", a.eps1).n("eps2", a.eps2), results))
        }
        BoundaryCmd::Slab(a) => {
            let (m1, m2) = a.media.media()?;
            let m3 = Medium::new(a.eps3, a.eps3_i, a.mu3, a.mu3_i, a.sigma3)?;
            let f = a.media.f;
            let (w1, w2, w3) = (wave_params(&m1, f)?, wave_params(&m2, f)?, wave_params(&m3, f)?);
            let (ze, rho) = slab_equivalent(w1.eta, w2.eta, w3.eta, w2.gamma(), a.d)?;
            let (ratio, att_db) = slab_through(w1.eta, w2.eta, w3.eta, w2.gamma(), a.d)?;
            let inputs = a
                .media
                .inputs()
                .n("eps3", a.eps3)
                .n("eps3_i", a.eps3_i)
                .n("mu3", a.mu3)
                .n("mu3_i", a.mu3_i)
                .n("sigma3", a.sigma3)
                .n("d", a.d);
            let results = Obj::new()
                .c("z_equivalent", ze)
                .set("rho", polar(rho))
                .n("reflected_fraction", rho.norm_sqr())
                .set("field_ratio", polar(ratio))
                .n("attenuation_db", att_db)
                .set("eta2", cx(w2.eta));
            Ok(document("boundary slab", inputs, results))
        }
        BoundaryCmd::Coating(a) => {
            let (eps2, d) = antireflection_layer(a.eps1, a.eps3, a.lambda0)?;
            let inputs = Obj::new().n("eps1", a.eps1).n("eps3", a.eps3).n("lambda0", a.lambda0);
            Ok(document("boundary coating", inputs, Obj::new().n("eps2", eps2).n("d", d)))
        }
    }
}
