//! Numerov shooting solver for real potentials with Dirichlet walls at the
//! grid ends.
//!
//! Each level is bracketed by Sturm node counting of a left-to-right shot and
//! then refined by bisection on the mismatch of the left and right shots at
//! the grid midpoint. The mismatch is the Numerov Casoratian
//! `zL(m)·zR(m+1) − zL(m+1)·zR(m)` with `z = (1 − h²k/12)·y`. It vanishes
//! exactly when the two discrete solutions are proportional, and it has no
//! trouble when y(mid) = 0.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{trapezoid, Grid, RealFunctionSamples};

pub const MAX_LEVELS: usize = 12;
pub const ENERGY_TOL: f64 = 1e-10;
pub const MAX_BISECTIONS: usize = 200;

const RESCALE_AT: f64 = 1e100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    pub index: usize,
    pub energy: f64,
    pub node_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverMeta {
    pub grid: Grid,
    pub matching_index: usize,
    pub matching_x: f64,
    pub e_bracket: (f64, f64),
    /// Levels below the lower end of the bracket.
    pub levels_below: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub levels: Vec<Level>,
    pub solver_meta: SolverMeta,
}

impl SpectrumResult {
    pub fn energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.energy).collect()
    }
}

struct Shooter<'a> {
    v: &'a [f64],
    h2: f64,
}

impl<'a> Shooter<'a> {
    fn new(v: &'a RealFunctionSamples) -> Self {
        let h = v.grid.h();
        Shooter { v: &v.values, h2: h * h }
    }

    fn weight(&self, i: usize, e: f64) -> f64 {
        1.0 + self.h2 * (e - self.v[i]) / 12.0
    }

    /// Shoots from `start` towards `stop` (inclusive); out[start] = 0.
    /// Rescaling only multiplies by positive factors.
    fn shoot(&self, e: f64, start: usize, stop: usize, out: &mut [f64]) {
        let fwd = stop > start;
        let next = |i: usize| if fwd { i + 1 } else { i - 1 };
        let prev_of = |i: usize| if fwd { i - 1 } else { i + 1 };
        out[start] = 0.0;
        let first = next(start);
        out[first] = 1e-10;
        let mut i = first;
        while i != stop {
            let j = next(i);
            let p = prev_of(i);
            let fi = self.weight(i, e);
            out[j] = ((12.0 - 10.0 * fi) * out[i] - self.weight(p, e) * out[p]) / self.weight(j, e);
            if out[j].abs() > RESCALE_AT {
                let s = 1.0 / out[j].abs();
                let mut k = start;
                loop {
                    out[k] *= s;
                    if k == j {
                        break;
                    }
                    k = next(k);
                }
            }
            i = j;
        }
    }

    fn node_count(&self, e: f64, buf: &mut [f64]) -> usize {
        let n = self.v.len();
        self.shoot(e, 0, n - 1, buf);
        sign_changes(&buf[1..n])
    }

    fn mismatch(&self, e: f64, m: usize, left: &mut [f64], right: &mut [f64]) -> f64 {
        let n = self.v.len();
        self.shoot(e, 0, m + 1, left);
        self.shoot(e, n - 1, m, right);
        let zl0 = self.weight(m, e) * left[m];
        let zl1 = self.weight(m + 1, e) * left[m + 1];
        let zr0 = self.weight(m, e) * right[m];
        let zr1 = self.weight(m + 1, e) * right[m + 1];
        let scale = (zl0.abs() + zl1.abs()) * (zr0.abs() + zr1.abs());
        (zl0 * zr1 - zl1 * zr0) / scale
    }
}

fn sign_changes(y: &[f64]) -> usize {
    let mut count = 0;
    let mut last = 0.0f64;
    for &v in y {
        if v == 0.0 {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            count += 1;
        }
        last = v;
    }
    count
}

/// Number of Dirichlet levels strictly below `e`.
pub fn count_levels_below(v: &RealFunctionSamples, e: f64) -> usize {
    let mut buf = vec![0.0; v.values.len()];
    Shooter::new(v).node_count(e, &mut buf)
}

/// The lowest `n_levels` Dirichlet levels inside `e_bracket`.
pub fn numerov_spectrum(v: &RealFunctionSamples, n_levels: usize, e_bracket: (f64, f64)) -> Result<SpectrumResult> {
    if n_levels > MAX_LEVELS {
        return Err(Error::Domain(format!("at most {MAX_LEVELS} levels, {n_levels} requested")));
    }
    let (lo, hi) = e_bracket;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("energy bracket ({lo}, {hi})")));
    }
    let n = v.values.len();
    let shooter = Shooter::new(v);
    let mut buf = vec![0.0; n];
    let n_lo = shooter.node_count(lo, &mut buf);
    let n_hi = shooter.node_count(hi, &mut buf);
    let found = n_hi.saturating_sub(n_lo);
    if found < n_levels {
        return Err(Error::Bracket { found, wanted: n_levels });
    }

    let m = n / 2;
    let mut left = vec![0.0; n];
    let mut right = vec![0.0; n];
    let mut levels = Vec::with_capacity(n_levels);
    for index in n_lo..n_lo + n_levels {
        // isolate [a, b] with count(a) = index, count(b) = index + 1
        let (mut a, mut b) = (lo, hi);
        for _ in 0..MAX_BISECTIONS {
            let ca = shooter.node_count(a, &mut buf);
            let cb = shooter.node_count(b, &mut buf);
            if ca == index && cb == index + 1 {
                break;
            }
            let mid = 0.5 * (a + b);
            if shooter.node_count(mid, &mut buf) <= index {
                a = mid;
            } else {
                b = mid;
            }
        }
        let mut fa = shooter.mismatch(a, m, &mut left, &mut right);
        for _ in 0..MAX_BISECTIONS {
            if b - a <= ENERGY_TOL {
                break;
            }
            let mid = 0.5 * (a + b);
            let fm = shooter.mismatch(mid, m, &mut left, &mut right);
            if fm == 0.0 {
                a = mid;
                b = mid;
                break;
            }
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        let energy = 0.5 * (a + b);
        let psi = eigenfunction(v, energy)?;
        let node_count = sign_changes(&psi.values[1..n - 1]);
        levels.push(Level { index, energy, node_count });
    }

    Ok(SpectrumResult {
        levels,
        solver_meta: SolverMeta {
            grid: v.grid,
            matching_index: m,
            matching_x: v.grid.x(m),
            e_bracket,
            levels_below: n_lo,
        },
    })
}

/// Unit-normalized Numerov solution at energy `e`, glued from both ends at
/// the grid midpoint.
pub fn eigenfunction(v: &RealFunctionSamples, e: f64) -> Result<RealFunctionSamples> {
    let n = v.values.len();
    let m = n / 2;
    let shooter = Shooter::new(v);
    let mut left = vec![0.0; n];
    let mut right = vec![0.0; n];
    shooter.shoot(e, 0, m + 1, &mut left);
    shooter.shoot(e, n - 1, m, &mut right);
    let num = left[m] * right[m] + left[m + 1] * right[m + 1];
    let den = right[m] * right[m] + right[m + 1] * right[m + 1];
    let s = num / den;
    let mut y: Vec<f64> = left[..=m].to_vec();
    y.extend(right[m + 1..].iter().map(|r| r * s));
    let norm = trapezoid(&y.iter().map(|v| v * v).collect::<Vec<_>>(), v.grid.h()).sqrt();
    // fix the overall sign so the first lobe is positive
    let sign = y.iter().find(|v| v.abs() > 1e-8 * norm).map(|v| v.signum()).unwrap_or(1.0);
    RealFunctionSamples::new(v.grid, y.into_iter().map(|v| sign * v / norm).collect())
}
