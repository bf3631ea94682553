//! Bounce-diagram transients on a lossless line with a resistive source and
//! a resistive, short or open load.
//!
//! Waveforms are exact and piecewise constant. Each travelling wave is
//! tracked analytically, so no time grid is involved.

use crate::error::{invalid, Error, Result};
use crate::linestate::Termination;

/// Source waveform applied at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Source {
    /// Unit step of amplitude `v0`.
    Step,
    /// Rectangular pulse of amplitude `v0` and the given width, s.
    Pulse(f64),
}

/// Line, source and load for a transient run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransientSetup {
    /// Source amplitude, V.
    pub v0: f64,
    /// Source resistance, Ω.
    pub zg: f64,
    /// Line characteristic impedance, Ω.
    pub z0: f64,
    /// Load, which must be a short, an open or a real resistance.
    pub zl: Termination,
    /// Line length, m.
    pub length: f64,
    /// Propagation velocity, m/s.
    pub velocity: f64,
    /// Source waveform.
    pub source: Source,
}

impl TransientSetup {
    fn validate(&self) -> Result<()> {
        if !self.v0.is_finite() {
            return Err(invalid("source amplitude must be finite"));
        }
        if !(self.zg >= 0.0) || !self.zg.is_finite() {
            return Err(invalid("source resistance must be finite and non-negative"));
        }
        if !(self.z0 > 0.0) || !(self.length > 0.0) || !(self.velocity > 0.0) {
            return Err(invalid("z0, length and velocity must be positive"));
        }
        if let Termination::Load(z) = self.zl {
            if z.im != 0.0 || !(z.re >= 0.0) || !z.re.is_finite() {
                return Err(invalid("load must be a finite non-negative resistance"));
            }
        }
        if let Source::Pulse(w) = self.source {
            if !(w > 0.0) || !w.is_finite() {
                return Err(invalid("pulse width must be positive"));
            }
        }
        Ok(())
    }

    /// One-way transit time `τ = length/velocity`, s.
    pub fn transit_time(&self) -> f64 {
        self.length / self.velocity
    }

    /// Load reflection coefficient.
    pub fn rho_l(&self) -> f64 {
        match self.zl {
            Termination::Short => -1.0,
            Termination::Open => 1.0,
            Termination::Load(z) => (z.re - self.z0) / (z.re + self.z0),
        }
    }

    /// Source reflection coefficient.
    pub fn rho_g(&self) -> f64 {
        (self.zg - self.z0) / (self.zg + self.z0)
    }

    /// Amplitude of the first launched wave, `V0·Z0/(ZG+Z0)`.
    pub fn v1(&self) -> f64 {
        self.v0 * self.z0 / (self.zg + self.z0)
    }
}

/// Arrival of one travelling wave at the observation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeEvent {
    /// Arrival time, s.
    pub time: f64,
    /// Wave index: even indices travel toward the load, odd toward the source.
    pub wave: usize,
    /// Voltage increment, V.
    pub dv: f64,
    /// Current increment, A, positive toward the load.
    pub di: f64,
}

/// Piecewise-constant signal; each value holds from its time until the next
/// breakpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    /// `(t, value)` pairs with strictly increasing times, starting at `t = 0`.
    pub breakpoints: Vec<(f64, f64)>,
}

impl Waveform {
    /// Value held at time `t`; zero before the first breakpoint.
    pub fn value_at(&self, t: f64) -> f64 {
        let idx = self.breakpoints.partition_point(|(bt, _)| *bt <= t);
        if idx == 0 {
            0.0
        } else {
            self.breakpoints[idx - 1].1
        }
    }
}

const MAX_WAVES: usize = 10_000_000;

/// Wave arrivals at `observe_at` up to `t_end` for a step source.
///
/// Wave `k` has amplitude `V1·ρL^⌈k/2⌉·ρG^⌊k/2⌋`. Waves travelling toward the
/// source contribute negative current.
pub fn lattice_events(setup: &TransientSetup, observe_at: f64, t_end: f64) -> Result<Vec<LatticeEvent>> {
    setup.validate()?;
    if !(0.0..=setup.length).contains(&observe_at) {
        return Err(invalid("observation point must lie on the line"));
    }
    if !(t_end > 0.0) || !t_end.is_finite() {
        return Err(invalid("end time must be positive"));
    }
    let tau = setup.transit_time();
    if t_end / tau > MAX_WAVES as f64 {
        return Err(invalid("end time spans too many transits"));
    }
    let frac = observe_at / setup.length;
    let (rl, rg) = (setup.rho_l(), setup.rho_g());
    let mut events = Vec::new();
    let mut amp = setup.v1();
    let mut k = 0usize;
    while (k as f64) * tau <= t_end {
        let forward = k.is_multiple_of(2);
        let offset = if forward { frac } else { 1.0 - frac };
        let time = (k as f64 + offset) * tau;
        if time <= t_end {
            let di = if forward { amp / setup.z0 } else { -amp / setup.z0 };
            events.push(LatticeEvent { time, wave: k, dv: amp, di });
        }
        amp *= if forward { rl } else { rg };
        k += 1;
    }
    Ok(events)
}

fn accumulate(mut deltas: Vec<(f64, f64)>, tol: f64) -> Waveform {
    deltas.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut bps: Vec<(f64, f64)> = vec![(0.0, 0.0)];
    let mut value = 0.0;
    for (t, d) in deltas {
        if d == 0.0 {
            continue;
        }
        value += d;
        let last = bps.len() - 1;
        if (t - bps[last].0).abs() <= tol {
            bps[last].1 = value;
        } else {
            bps.push((t, value));
        }
    }
    bps.dedup_by(|b, a| b.1 == a.1 && b.0 > 0.0);
    Waveform { breakpoints: bps }
}

/// Exact voltage and current waveforms at `observe_at` up to `t_end`.
pub fn bounce(setup: &TransientSetup, observe_at: f64, t_end: f64) -> Result<(Waveform, Waveform)> {
    let events = lattice_events(setup, observe_at, t_end)?;
    let mut dv: Vec<(f64, f64)> = events.iter().map(|e| (e.time, e.dv)).collect();
    let mut di: Vec<(f64, f64)> = events.iter().map(|e| (e.time, e.di)).collect();
    if let Source::Pulse(w) = setup.source {
        for e in &events {
            let t = e.time + w;
            if t <= t_end {
                dv.push((t, -e.dv));
                di.push((t, -e.di));
            }
        }
    }
    let tol = 1e-12 * setup.transit_time();
    Ok((accumulate(dv, tol), accumulate(di, tol)))
}

/// Final voltage and current at the load for a step source.
pub fn steady_state(setup: &TransientSetup) -> Result<(f64, f64)> {
    setup.validate()?;
    if let Source::Pulse(_) = setup.source {
        return Err(Error::NotApplicable("a pulse decays to zero".into()));
    }
    if (setup.rho_g() * setup.rho_l()).abs() >= 1.0 {
        return Err(Error::NotApplicable("reflections do not decay".into()));
    }
    let (v0, zg) = (setup.v0, setup.zg);
    Ok(match setup.zl {
        Termination::Open => (v0, 0.0),
        Termination::Short => (0.0, v0 / zg),
        Termination::Load(z) => (v0 * z.re / (zg + z.re), v0 / (zg + z.re)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Complex;

    fn setup(zg: f64, zl: Termination, source: Source) -> TransientSetup {
        TransientSetup { v0: 10.0, zg, z0: 50.0, zl, length: 100.0, velocity: 2e8, source }
    }

    #[test]
    fn wave_amplitudes() {
        let s = setup(25.0, Termination::Load(Complex::new(75.0, 0.0)), Source::Step);
        let ev = lattice_events(&s, 100.0, 5.5 * s.transit_time()).unwrap();
        let amps: Vec<f64> = ev.iter().map(|e| e.dv).collect();
        let want = [20.0 / 3.0, 4.0 / 3.0, -4.0 / 9.0, -4.0 / 45.0, 4.0 / 135.0];
        for (a, w) in amps.iter().zip(want) {
            assert!((a - w).abs() < 1e-12, "{amps:?}");
        }
    }

    #[test]
    fn matched_line_single_step() {
        let s = setup(50.0, Termination::Load(Complex::new(50.0, 0.0)), Source::Step);
        let tau = s.transit_time();
        let (v, i) = bounce(&s, 100.0, 10.0 * tau).unwrap();
        assert_eq!(v.breakpoints, vec![(0.0, 0.0), (tau, 5.0)]);
        assert_eq!(i.breakpoints, vec![(0.0, 0.0), (tau, 0.1)]);
    }

    #[test]
    fn source_end_starts_at_time_zero() {
        let s = setup(25.0, Termination::Open, Source::Step);
        let (v, _) = bounce(&s, 0.0, 1e-9).unwrap();
        assert_eq!(v.breakpoints[0].0, 0.0);
        assert!((v.breakpoints[0].1 - 20.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn steady_state_cases() {
        let s = setup(25.0, Termination::Load(Complex::new(75.0, 0.0)), Source::Step);
        let (v, i) = steady_state(&s).unwrap();
        assert!((v - 7.5).abs() < 1e-12 && (i - 0.1).abs() < 1e-12);
        let s = setup(25.0, Termination::Open, Source::Step);
        assert_eq!(steady_state(&s).unwrap(), (10.0, 0.0));
        let s = setup(25.0, Termination::Short, Source::Step);
        assert_eq!(steady_state(&s).unwrap(), (0.0, 0.4));
        let s = setup(25.0, Termination::Short, Source::Pulse(1e-6));
        assert!(matches!(steady_state(&s), Err(Error::NotApplicable(_))));
        let s = setup(0.0, Termination::Open, Source::Step);
        assert!(matches!(steady_state(&s), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn value_at_holds() {
        let w = Waveform { breakpoints: vec![(0.0, 0.0), (1.0, 2.0), (3.0, 1.0)] };
        assert_eq!(w.value_at(-1.0), 0.0);
        assert_eq!(w.value_at(1.0), 2.0);
        assert_eq!(w.value_at(2.9), 2.0);
        assert_eq!(w.value_at(10.0), 1.0);
    }

    #[test]
    fn rejects_reactive_load_and_bad_point() {
        let s = setup(25.0, Termination::Load(Complex::new(75.0, 1.0)), Source::Step);
        assert!(bounce(&s, 0.0, 1e-6).is_err());
        let s = setup(25.0, Termination::Open, Source::Step);
        assert!(bounce(&s, 200.0, 1e-6).is_err());
        assert!(bounce(&s, 50.0, 0.0).is_err());
    }
}
