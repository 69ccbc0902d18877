//! Five-point finite-difference stencils on a uniform grid.
//!
//! Interior points use fourth-order central differences. The two points at
//! each edge fall back to one-sided five-point formulas; they are less
//! accurate and residual norms skip them (see [`EDGE`]).

use std::ops::{Add, Mul, Sub};

/// Number of samples per edge excluded from residual norms.
pub const EDGE: usize = 2;

pub trait Sample: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}
impl<T> Sample for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T> {}

fn combo<T: Sample>(f: &[T], idx: [usize; 5], w: [f64; 5]) -> T {
    let mut acc = f[idx[0]] * w[0];
    for k in 1..5 {
        acc = acc + f[idx[k]] * w[k];
    }
    acc
}

/// First derivative of uniformly spaced samples.
pub fn first_derivative<T: Sample>(f: &[T], h: f64) -> Vec<T> {
    let n = f.len();
    assert!(n >= 5, "stencil needs at least 5 samples");
    let s = 1.0 / (12.0 * h);
    let mut out = Vec::with_capacity(n);
    out.push(combo(f, [0, 1, 2, 3, 4], [-25.0 * s, 48.0 * s, -36.0 * s, 16.0 * s, -3.0 * s]));
    out.push(combo(f, [0, 1, 2, 3, 4], [-3.0 * s, -10.0 * s, 18.0 * s, -6.0 * s, s]));
    for i in 2..n - 2 {
        out.push(combo(f, [i - 2, i - 1, i, i + 1, i + 2], [s, -8.0 * s, 0.0, 8.0 * s, -s]));
    }
    let m = n - 5;
    out.push(combo(f, [m, m + 1, m + 2, m + 3, m + 4], [-s, 6.0 * s, -18.0 * s, 10.0 * s, 3.0 * s]));
    out.push(combo(
        f,
        [m, m + 1, m + 2, m + 3, m + 4],
        [3.0 * s, -16.0 * s, 36.0 * s, -48.0 * s, 25.0 * s],
    ));
    out
}

/// Second derivative of uniformly spaced samples.
pub fn second_derivative<T: Sample>(f: &[T], h: f64) -> Vec<T> {
    let n = f.len();
    assert!(n >= 5, "stencil needs at least 5 samples");
    let s = 1.0 / (12.0 * h * h);
    let left0 = [35.0 * s, -104.0 * s, 114.0 * s, -56.0 * s, 11.0 * s];
    let left1 = [11.0 * s, -20.0 * s, 6.0 * s, 4.0 * s, -s];
    let mut out = Vec::with_capacity(n);
    out.push(combo(f, [0, 1, 2, 3, 4], left0));
    out.push(combo(f, [0, 1, 2, 3, 4], left1));
    for i in 2..n - 2 {
        out.push(combo(f, [i - 2, i - 1, i, i + 1, i + 2], [-s, 16.0 * s, -30.0 * s, 16.0 * s, -s]));
    }
    let m = n - 5;
    out.push(combo(f, [m + 4, m + 3, m + 2, m + 1, m], left1));
    out.push(combo(f, [m + 4, m + 3, m + 2, m + 1, m], left0));
    out
}

/// Max-norm over `values`, skipping `skip` samples at each edge.
pub fn interior_max<I: IntoIterator<Item = f64>>(values: I, len: usize, skip: usize) -> f64 {
    values
        .into_iter()
        .enumerate()
        .filter(|(i, _)| *i >= skip && *i + skip < len)
        .fold(0.0, |m, (_, v)| m.max(v))
}
