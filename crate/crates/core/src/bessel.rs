//! Bessel functions of the first kind and the zeros used for circular
//! waveguide cutoffs.

use crate::error::{Error, Result};
use crate::guides::ModeFamily;

/// `J_0(x) … J_nmax(x)` by normalized backward recurrence.
pub fn bessel_j_all(nmax: u32, x: f64) -> Vec<f64> {
    let nmax = nmax as usize;
    let mut out = vec![0.0; nmax + 1];
    if x == 0.0 {
        out[0] = 1.0;
        return out;
    }
    let ax = x.abs();
    let top = (nmax as f64).max(ax);
    let mut m = (top + 20.0 + (40.0 * top).sqrt()) as usize;
    m += m % 2;
    let (mut jp, mut j) = (0.0f64, 1e-30f64);
    let mut sum = 0.0;
    for k in (1..=m).rev() {
        let jm = 2.0 * k as f64 / ax * j - jp;
        jp = j;
        j = jm;
        if k - 1 <= nmax {
            out[k - 1] = j;
        }
        if (k - 1) % 2 == 0 && k > 1 {
            sum += 2.0 * j;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            sum *= 1e-250;
            out.iter_mut().for_each(|v| *v *= 1e-250);
        }
    }
    sum += j;
    let norm = 1.0 / sum;
    for (n, v) in out.iter_mut().enumerate() {
        *v *= norm;
        if x < 0.0 && n % 2 == 1 {
            *v = -*v;
        }
    }
    out
}

/// `J_n(x)`.
pub fn bessel_j(n: u32, x: f64) -> f64 {
    bessel_j_all(n, x)[n as usize]
}

/// `J_n′(x)`, from `J_0′ = −J_1` and `J_n′ = (J_{n−1} − J_{n+1})/2`.
pub fn bessel_j_prime(n: u32, x: f64) -> f64 {
    let j = bessel_j_all(n + 1, x);
    if n == 0 {
        -j[1]
    } else {
        0.5 * (j[n as usize - 1] - j[n as usize + 1])
    }
}

/// One entry of the circular-guide root table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootEntry {
    /// TE uses zeros of `J_n′`, TM zeros of `J_n`.
    pub family: ModeFamily,
    /// Azimuthal index.
    pub n: u32,
    /// Radial index.
    pub r: u32,
    /// Tabulated root.
    pub root: f64,
    /// Cutoff wavelength over radius, `λ0c/r0`.
    pub lambda_c_over_r0: f64,
}

const fn entry(family: ModeFamily, n: u32, r: u32, root: f64, lambda_c_over_r0: f64) -> RootEntry {
    RootEntry { family, n, r, root, lambda_c_over_r0 }
}

/// Tabulated circular-guide roots, three decimals, with the customary
/// `TE0r` naming by the zeros of `J_1`.
pub const ROOT_TABLE: [RootEntry; 16] = {
    use ModeFamily::{TE, TM};
    [
        entry(TM, 0, 1, 2.405, 2.61),
        entry(TE, 0, 1, 3.832, 1.64),
        entry(TM, 0, 2, 5.520, 1.14),
        entry(TE, 0, 2, 7.016, 0.89),
        entry(TE, 1, 1, 1.840, 3.41),
        entry(TM, 1, 1, 3.832, 1.64),
        entry(TE, 1, 2, 5.330, 1.18),
        entry(TM, 1, 2, 7.016, 0.89),
        entry(TE, 2, 1, 3.054, 2.06),
        entry(TM, 2, 1, 5.135, 1.22),
        entry(TE, 2, 2, 6.706, 0.94),
        entry(TE, 3, 1, 4.201, 1.49),
        entry(TM, 3, 1, 6.379, 0.98),
        entry(TE, 4, 1, 5.318, 1.18),
        entry(TM, 4, 1, 7.588, 0.83),
        entry(TE, 5, 1, 6.416, 0.98),
    ]
};

/// Table entry for `(family, n, r)`, if listed.
pub fn table_entry(family: ModeFamily, n: u32, r: u32) -> Option<RootEntry> {
    ROOT_TABLE.iter().copied().find(|e| e.family == family && e.n == n && e.r == r)
}

const SCAN_START: f64 = 1e-3;
const SCAN_STEP: f64 = 0.01;
const SCAN_LIMIT: f64 = 400.0;

fn root_function(family: ModeFamily, n: u32) -> impl Fn(f64) -> f64 {
    move |x| match (family, n) {
        (ModeFamily::TE, 0) => bessel_j(1, x),
        (ModeFamily::TE, _) => bessel_j_prime(n, x),
        _ => bessel_j(n, x),
    }
}

/// The `r`-th positive zero located numerically: a sign-change scan from
/// `x = 1e-3` in steps of 0.01, then bisection to 1e-13.
pub fn numeric_root(family: ModeFamily, n: u32, r: u32) -> Result<f64> {
    if family == ModeFamily::TEM || r == 0 || n > 100 {
        return Err(Error::UnknownMode(format!("{family:?}{n}{r}")));
    }
    let g = root_function(family, n);
    let mut count = 0;
    let mut x0 = SCAN_START;
    let mut g0 = g(x0);
    while x0 < SCAN_LIMIT {
        let x1 = x0 + SCAN_STEP;
        let g1 = g(x1);
        if g1 == 0.0 || g0 * g1 < 0.0 {
            count += 1;
            if count == r {
                if g1 == 0.0 {
                    return Ok(x1);
                }
                let (mut lo, mut hi, mut glo) = (x0, x1, g0);
                while hi - lo > 1e-13 {
                    let mid = 0.5 * (lo + hi);
                    let gm = g(mid);
                    if gm == 0.0 {
                        return Ok(mid);
                    }
                    if glo * gm < 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                        glo = gm;
                    }
                }
                return Ok(0.5 * (lo + hi));
            }
            if g1 == 0.0 {
                x0 = x1 + SCAN_STEP * 1e-3;
                g0 = g(x0);
                continue;
            }
        }
        x0 = x1;
        g0 = g1;
    }
    Err(Error::UnknownMode(format!("{family:?}{n}{r} beyond the search range")))
}

/// Root for `(family, n, r)`: the table value, or the numerically refined
/// zero when `refine` is set.
pub fn bessel_root(family: ModeFamily, n: u32, r: u32, refine: bool) -> Result<f64> {
    if refine {
        return numeric_root(family, n, r);
    }
    table_entry(family, n, r)
        .map(|e| e.root)
        .ok_or_else(|| Error::UnknownMode(format!("{family:?}{n}{r} is not tabulated")))
}
