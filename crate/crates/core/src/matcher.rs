//! Single-stub matching in the four series/shunt and short/open
//! configurations.
//!
//! Positions and lengths are in wavelengths. `d1` is the distance from the
//! load to the stub junction and `d2` the stub length.

use std::f64::consts::PI;

use crate::error::{invalid, Result};
use crate::lineparams::PropagationConstant;
use crate::linestate::{input_impedance, Termination};
use crate::Complex;

/// Where the stub is connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    /// In series with the main line.
    Series,
    /// In parallel with the main line.
    Shunt,
}

/// How the far end of the stub is terminated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StubEnd {
    /// Short-circuited stub.
    Short,
    /// Open-circuited stub.
    Open,
}

/// Stub configuration. `k` is the ratio of the stub impedance to `Z0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StubConfig {
    /// Series or shunt connection.
    pub topology: Topology,
    /// Stub termination.
    pub end: StubEnd,
    /// Stub characteristic impedance over `Z0`.
    pub k: f64,
}

impl StubConfig {
    /// Configuration with a stub of the same impedance as the line.
    pub fn new(topology: Topology, end: StubEnd) -> Self {
        Self { topology, end, k: 1.0 }
    }

    /// Same configuration with stub impedance ratio `k`.
    pub fn with_k(self, k: f64) -> Self {
        Self { k, ..self }
    }
}

/// One matching solution, both lengths in wavelengths in `[0, 0.5)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StubSolution {
    /// Distance from the load to the stub, λ.
    pub d1: f64,
    /// Stub length, λ.
    pub d2: f64,
}

fn fold_half(turns: f64) -> f64 {
    let t = turns.rem_euclid(0.5);
    if t >= 0.5 {
        0.0
    } else {
        t
    }
}

/// Root of `p·a² − 2x·a + q = 0` chosen by `sign`, `None` when infinite.
fn quadratic_root(p: f64, x: f64, q: f64, s: f64, sign: f64) -> Option<f64> {
    let direct = x + sign * s;
    let alt = x - sign * s;
    if p.abs() >= alt.abs() {
        if p == 0.0 {
            None
        } else {
            Some(direct / p)
        }
    } else {
        Some(q / alt)
    }
}

/// Normalized impedance at `theta = βd` toward the generator.
fn transform(zn: Complex, theta: f64) -> Complex {
    let (s, c) = theta.sin_cos();
    let j = Complex::new(0.0, 1.0);
    (zn * c + j * s) / (c + j * zn * s)
}

/// Stub length in λ that cancels the reactive part of `zd`.
fn stub_length(zd: Complex, cfg: &StubConfig) -> f64 {
    let k = cfg.k;
    let theta = match cfg.topology {
        Topology::Series => {
            let xs = -zd.im;
            match cfg.end {
                StubEnd::Short => xs.atan2(k),
                StubEnd::Open => (-k).atan2(xs),
            }
        }
        Topology::Shunt => {
            let bs = -zd.inv().im;
            match cfg.end {
                StubEnd::Short => (-1.0f64).atan2(k * bs),
                StubEnd::Open => (k * bs).atan2(1.0),
            }
        }
    };
    fold_half(theta.rem_euclid(PI) / (2.0 * PI))
}

fn check_config(cfg: &StubConfig) -> Result<()> {
    if !(cfg.k > 0.0) || !cfg.k.is_finite() {
        return Err(invalid("stub impedance ratio must be positive"));
    }
    Ok(())
}

/// Both single-stub solutions for load `zl` on a line of impedance `z0`,
/// ordered by ascending `d1` then `d2`.
pub fn solve_stub(zl: Complex, z0: f64, cfg: StubConfig) -> Result<[StubSolution; 2]> {
    check_config(&cfg)?;
    if !(z0 > 0.0) || !z0.is_finite() {
        return Err(invalid("characteristic impedance must be positive"));
    }
    if !(zl.re > 0.0) || !zl.re.is_finite() || !zl.im.is_finite() {
        return Err(invalid("load resistance must be positive"));
    }
    let zn = zl / z0;
    let (r, x) = (zn.re, zn.im);
    if (zn - 1.0).norm() <= 1e-12 {
        let sol = StubSolution { d1: 0.0, d2: stub_length(Complex::new(1.0, 0.0), &cfg) };
        return Ok([sol, sol]);
    }
    let (p, q) = match cfg.topology {
        Topology::Series => (r * r + x * x - r, 1.0 - r),
        Topology::Shunt => (r - 1.0, r - r * r - x * x),
    };
    let s = (r * ((r - 1.0).powi(2) + x * x)).sqrt();
    let mut sols = [1.0, -1.0].map(|sign| {
        let theta = match quadratic_root(p, x, q, s, sign) {
            Some(a) => a.atan().rem_euclid(PI),
            None => PI / 2.0,
        };
        let d1 = fold_half(theta / (2.0 * PI));
        let zd = transform(zn, 2.0 * PI * d1);
        StubSolution { d1, d2: stub_length(zd, &cfg) }
    });
    sols.sort_by(|a, b| a.d1.total_cmp(&b.d1).then(a.d2.total_cmp(&b.d2)));
    Ok(sols)
}

/// Relative mismatch at the stub junction for a proposed solution.
///
/// Returns `|Z − Z0|/Z0` for series stubs and `|Y − Y0|/Y0` for shunt stubs,
/// or infinity when the junction sees an open (series) or short (shunt).
pub fn verify_match(zl: Complex, z0: f64, cfg: StubConfig, sol: StubSolution) -> Result<f64> {
    check_config(&cfg)?;
    if !(z0 > 0.0) {
        return Err(invalid("characteristic impedance must be positive"));
    }
    let beta = PropagationConstant::lossless(2.0 * PI);
    let z0c = Complex::new(z0, 0.0);
    let line = input_impedance(Termination::Load(zl), z0c, beta, sol.d1)?;
    let end = match cfg.end {
        StubEnd::Short => Termination::Short,
        StubEnd::Open => Termination::Open,
    };
    let stub = input_impedance(end, z0c * cfg.k, beta, sol.d2)?;
    let residual = match cfg.topology {
        Topology::Series => match (line.impedance(), stub.impedance()) {
            (Some(a), Some(b)) => (a + b - z0c).norm() / z0,
            _ => f64::INFINITY,
        },
        Topology::Shunt => match (line.admittance(), stub.admittance()) {
            (Some(a), Some(b)) => (a + b - 1.0 / z0).norm() * z0,
            _ => f64::INFINITY,
        },
    };
    Ok(residual)
}
