//! Smith chart arithmetic in the reflection-coefficient plane and a
//! deterministic SVG renderer.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{invalid, Error, Result};
use crate::Complex;

/// Reflection coefficient of normalized impedance `z`.
pub fn gamma_from_z(z: Complex) -> Result<Complex> {
    let den = z + 1.0;
    if den.norm() == 0.0 {
        return Err(Error::Pole("z = -1 has no reflection coefficient".into()));
    }
    Ok((z - 1.0) / den)
}

/// Normalized impedance of reflection coefficient `g`.
pub fn z_from_gamma(g: Complex) -> Result<Complex> {
    let den = Complex::new(1.0, 0.0) - g;
    if den.norm() == 0.0 {
        return Err(Error::Pole("Γ = 1 is an open circuit".into()));
    }
    Ok((g + 1.0) / den)
}

/// Moves `g` a distance `delta_l_over_lambda` toward the generator.
///
/// One half wavelength is a full turn, so the rotation is reduced modulo
/// 0.5 before the phase is applied.
pub fn rotate_toward_generator(g: Complex, delta_l_over_lambda: f64) -> Complex {
    let turns = delta_l_over_lambda.rem_euclid(0.5);
    if turns == 0.0 {
        return g;
    }
    g * Complex::from_polar(1.0, -4.0 * PI * turns)
}

/// Standing-wave ratio read on the positive real axis, `r_max`.
pub fn r_max(g: Complex) -> f64 {
    let m = g.norm();
    if m >= 1.0 {
        f64::INFINITY
    } else {
        (1.0 + m) / (1.0 - m)
    }
}

/// Member of one of the two Smith chart circle families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CircleKind {
    /// Constant normalized resistance.
    R(f64),
    /// Constant normalized reactance.
    X(f64),
}

/// Geometry of a circle family member in the Γ plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChartCircle {
    /// Circle with centre `(re, im)` and radius.
    Circle {
        /// Centre as `(re, im)`.
        center: (f64, f64),
        /// Radius.
        radius: f64,
    },
    /// The `x = 0` member, which degenerates to the real axis.
    RealAxis,
}

/// Centre and radius of an `r` or `x` circle.
pub fn circle_geometry(kind: CircleKind) -> Result<ChartCircle> {
    match kind {
        CircleKind::R(r) => {
            if !(r >= 0.0) || !r.is_finite() {
                return Err(invalid("resistance circle needs finite r ≥ 0"));
            }
            Ok(ChartCircle::Circle { center: (r / (r + 1.0), 0.0), radius: 1.0 / (r + 1.0) })
        }
        CircleKind::X(x) => {
            if !x.is_finite() {
                return Err(invalid("reactance circle needs finite x"));
            }
            if x == 0.0 {
                return Ok(ChartCircle::RealAxis);
            }
            Ok(ChartCircle::Circle { center: (1.0, 1.0 / x), radius: 1.0 / x.abs() })
        }
    }
}

/// Point on the chart with an optional electrical position tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaPoint {
    /// Reflection coefficient.
    pub gamma: Complex,
    /// Position in wavelengths, in `[0, 0.5)`.
    pub position_lambda: Option<f64>,
}

impl GammaPoint {
    /// Validated point inside the unit disk.
    pub fn new(gamma: Complex) -> Result<Self> {
        if !(gamma.norm() <= 1.0 + 1e-12) {
            return Err(invalid("|Γ| must not exceed one"));
        }
        Ok(Self { gamma, position_lambda: None })
    }

    /// Same point tagged with an electrical position.
    pub fn at(self, position_lambda: f64) -> Self {
        Self { position_lambda: Some(position_lambda.rem_euclid(0.5)), ..self }
    }
}

/// Constant-|Γ| arc traced toward the generator.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartArc {
    /// Starting reflection coefficient.
    pub start: Complex,
    /// Length of the walk in wavelengths, in `[0, 0.5]`.
    pub sweep: f64,
    /// Label drawn at the end of the arc.
    pub label: String,
}

/// Items drawn over the chart grid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ChartAnnotation {
    /// Labelled points.
    pub points: Vec<(GammaPoint, String)>,
    /// Labelled arcs.
    pub arcs: Vec<ChartArc>,
    /// Constant-SWR circles given by `|Γ|`.
    pub swr_circles: Vec<f64>,
}

/// Circle family values drawn as the chart grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    /// Normalized resistance values.
    pub r_values: Vec<f64>,
    /// Normalized reactance values.
    pub x_values: Vec<f64>,
}

impl Default for Grid {
    fn default() -> Self {
        Self {
            r_values: vec![0.0, 0.5, 1.0, 2.0, 5.0],
            x_values: vec![0.5, -0.5, 1.0, -1.0, 2.0, -2.0],
        }
    }
}

const SCALE: f64 = 500.0;
const SEGMENTS_PER_HALF_WAVE: f64 = 64.0;

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn to_svg(g: Complex) -> (String, String) {
    (num(SCALE * g.re), num(-SCALE * g.im))
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn circle_element(out: &mut String, circle: ChartCircle, class: &str) {
    match circle {
        ChartCircle::Circle { center, radius } => {
            let (cx, cy) = to_svg(Complex::new(center.0, center.1));
            let _ = writeln!(
                out,
                r#"<circle class="{class}" cx="{cx}" cy="{cy}" r="{}"/>"#,
                num(SCALE * radius)
            );
        }
        ChartCircle::RealAxis => {
            let _ = writeln!(
                out,
                r#"<line class="{class}" x1="{}" y1="0.000" x2="{}" y2="0.000"/>"#,
                num(-SCALE),
                num(SCALE)
            );
        }
    }
}

fn validate(ann: &ChartAnnotation, grid: &Grid) -> Result<()> {
    for (p, _) in &ann.points {
        GammaPoint::new(p.gamma)?;
    }
    for a in &ann.arcs {
        GammaPoint::new(a.start)?;
        if !(0.0..=0.5).contains(&a.sweep) {
            return Err(invalid("arc sweep must lie in [0, 0.5]"));
        }
    }
    for m in &ann.swr_circles {
        if !(0.0..=1.0).contains(m) {
            return Err(invalid("SWR circle radius must lie in [0, 1]"));
        }
    }
    for r in &grid.r_values {
        circle_geometry(CircleKind::R(*r))?;
    }
    for x in &grid.x_values {
        circle_geometry(CircleKind::X(*x))?;
    }
    Ok(())
}

/// Renders the chart grid and annotation as an SVG 1.1 document.
///
/// The unit disk has radius 500 centred at the origin of a
/// `-550 -550 1100 1100` view box, with the real axis to the right and the
/// imaginary axis up. Output depends only on the inputs.
pub fn render_chart(ann: &ChartAnnotation, grid: &Grid) -> Result<String> {
    validate(ann, grid)?;
    let mut out = String::new();
    out.push_str(r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    out.push('\n');
    out.push_str(
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="1100" height="1100" viewBox="-550 -550 1100 1100">"#,
    );
    out.push('\n');
    out.push_str(concat!(
        "<style>",
        ".grid{fill:none;stroke:#999999;stroke-width:1}",
        ".rim{fill:none;stroke:#000000;stroke-width:2}",
        ".swr{fill:none;stroke:#1f77b4;stroke-width:1.5;stroke-dasharray:8 4}",
        ".arc{fill:none;stroke:#d62728;stroke-width:2}",
        ".point{fill:#d62728;stroke:none}",
        "text{font-family:sans-serif;font-size:14px}",
        ".grid-label{fill:#666666}",
        "</style>\n"
    ));
    out.push_str(r#"<defs><clipPath id="unit-disk"><circle cx="0" cy="0" r="500"/></clipPath></defs>"#);
    out.push('\n');
    out.push_str("<g clip-path=\"url(#unit-disk)\">\n");
    for r in &grid.r_values {
        circle_element(&mut out, circle_geometry(CircleKind::R(*r))?, "grid");
    }
    for x in &grid.x_values {
        circle_element(&mut out, circle_geometry(CircleKind::X(*x))?, "grid");
    }
    circle_element(&mut out, ChartCircle::RealAxis, "grid");
    out.push_str("</g>\n");
    let _ = writeln!(out, r#"<circle class="rim" cx="0.000" cy="0.000" r="{}"/>"#, num(SCALE));
    for r in &grid.r_values {
        let (x, _) = to_svg(Complex::new((r - 1.0) / (r + 1.0), 0.0));
        let _ = writeln!(out, r#"<text class="grid-label" x="{x}" y="-4.000">{}</text>"#, escape(&format!("{r}")));
    }
    for x in &grid.x_values {
        let g = gamma_from_z(Complex::new(0.0, *x))?;
        let (px, py) = to_svg(g * 1.04);
        let _ = writeln!(
            out,
            r#"<text class="grid-label" x="{px}" y="{py}" text-anchor="middle">{}</text>"#,
            escape(&format!("{x}j"))
        );
    }
    for m in &ann.swr_circles {
        let _ = writeln!(out, r#"<circle class="swr" cx="0.000" cy="0.000" r="{}"/>"#, num(SCALE * m));
    }
    for arc in &ann.arcs {
        let n = ((SEGMENTS_PER_HALF_WAVE * arc.sweep / 0.5).ceil() as usize).max(1);
        let pts: Vec<String> = (0..=n)
            .map(|i| {
                let t = arc.sweep * i as f64 / n as f64;
                let g = arc.start * Complex::from_polar(1.0, -4.0 * PI * t);
                let (x, y) = to_svg(g);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(out, r#"<polyline class="arc" points="{}"/>"#, pts.join(" "));
        let end = arc.start * Complex::from_polar(1.0, -4.0 * PI * arc.sweep);
        let (x, y) = to_svg(end);
        let _ = writeln!(out, r#"<text class="arc-label" x="{x}" y="{y}" dx="8" dy="16">{}</text>"#, escape(&arc.label));
    }
    for (p, label) in &ann.points {
        let (x, y) = to_svg(p.gamma);
        let _ = writeln!(out, r#"<circle class="point" cx="{x}" cy="{y}" r="5"/>"#);
        let text = match p.position_lambda {
            Some(pos) => format!("{label} ({}λ)", num(pos)),
            None => label.clone(),
        };
        let _ = writeln!(out, r#"<text class="point-label" x="{x}" y="{y}" dx="8" dy="-8">{}</text>"#, escape(&text));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
