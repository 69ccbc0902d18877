//! Complex Gamma, Kummer ₁F₁ and Tricomi Ψ for complex parameters and real
//! argument.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance to a non-positive integer below which Γ is treated as a pole.
pub const POLE_TOL: f64 = 1e-12;

/// Largest argument accepted by [`kummer_1f1`].
pub const KUMMER_Z_MAX: f64 = 100.0;

/// Term budget for every series in this module.
pub const MAX_TERMS: usize = 500;

const SERIES_TOL: f64 = 1e-15;

/// Tricomi Ψ uses the asymptotic series from this argument onward (when it
/// converges to [`SERIES_TOL`]).
pub const TRICOMI_ASYMPTOTIC_Z: f64 = 20.0;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

fn near_nonpositive_integer(z: Complex64, tol: f64) -> bool {
    z.re < 0.5 && z.im.abs() <= tol && (z.re - z.re.round()).abs() <= tol && z.re.round() <= 0.0
}

fn near_integer(z: Complex64, tol: f64) -> bool {
    z.im.abs() <= tol && (z.re - z.re.round()).abs() <= tol
}

/// Complex Gamma function (Lanczos, g = 7, with reflection for Re z < 1/2).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("gamma({z})")));
    }
    if near_nonpositive_integer(z, POLE_TOL) {
        return Err(Error::Pole(format!("gamma at {z}")));
    }
    let g = if z.re < 0.5 {
        let s = (z * PI).sin();
        PI / (s * lanczos(Complex64::new(1.0, 0.0) - z))
    } else {
        lanczos(z)
    };
    finite(g, "gamma (overflow)")
}

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * acc
}

/// Γ(num)/Γ(den), with 1/Γ(den) = 0 when `den` sits on a pole.
fn gamma_ratio(num: Complex64, den: Complex64) -> Result<Complex64> {
    if near_nonpositive_integer(den, POLE_TOL) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(gamma(num)? / gamma(den)?)
}

/// Kummer's confluent hypergeometric function ₁F₁(a; c; z) by direct Taylor
/// summation, for 0 ≤ z ≤ 100.
pub fn kummer_1f1(a: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if near_nonpositive_integer(c, POLE_TOL) {
        return Err(Error::Pole(format!("1F1 lower parameter c = {c}")));
    }
    if !(0.0..=KUMMER_Z_MAX).contains(&z) || !a.is_finite() || !c.is_finite() {
        return Err(Error::Domain(format!("1F1 argument z = {z}")));
    }
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    if z == 0.0 {
        return Ok(sum);
    }
    for n in 0..MAX_TERMS {
        let k = n as f64;
        term *= (a + k) / (c + k) * (z / (k + 1.0));
        sum += term;
        if term.norm() == 0.0 {
            return finite(sum, "1F1");
        }
        // Past n > z and n > |a| the terms shrink monotonically.
        let settled = k + 1.0 > z && k + 1.0 > a.norm();
        if settled && term.norm() <= SERIES_TOL * sum.norm() {
            return finite(sum, "1F1");
        }
    }
    Err(Error::Convergence(format!("1F1({a}; {c}; {z}) exceeded {MAX_TERMS} terms")))
}

/// Tricomi's confluent hypergeometric function Ψ(a; c; z), z > 0.
///
/// Evaluated through the connection formula
/// `Ψ = Γ(1−c)/Γ(a−c+1)·₁F₁(a;c;z) + Γ(c−1)/Γ(a)·z^(1−c)·₁F₁(a−c+1;2−c;z)`.
/// For z ≥ [`TRICOMI_ASYMPTOTIC_Z`] the two terms cancel to roughly
/// e^(−z) relative size, so there the optimally truncated asymptotic series
/// `z^(−a) Σ (a)ₙ(a−c+1)ₙ/n! (−1/z)ⁿ` is used whenever it reaches full
/// precision.
pub fn tricomi_psi(a: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("Psi argument z = {z}")));
    }
    if near_integer(c, 1e-10) {
        return Err(Error::Pole(format!("Psi connection formula needs non-integer c, got {c}")));
    }
    if z >= TRICOMI_ASYMPTOTIC_Z {
        if let Some(v) = tricomi_asymptotic(a, c, z) {
            return finite(v, "Psi");
        }
    }
    tricomi_connection(a, c, z)
}

/// The connection-formula route of [`tricomi_psi`], with no asymptotic
/// shortcut.
pub fn tricomi_connection(a: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("Psi argument z = {z}")));
    }
    if near_integer(c, 1e-10) {
        return Err(Error::Pole(format!("Psi connection formula needs non-integer c, got {c}")));
    }
    let one = Complex64::new(1.0, 0.0);
    let b = a - c + 1.0;
    let first = gamma_ratio(one - c, b)? * kummer_1f1(a, c, z)?;
    let second = gamma_ratio(c - 1.0, a)?
        * Complex64::new(z, 0.0).powc(one - c)
        * kummer_1f1(b, 2.0 - c, z)?;
    finite(first + second, "Psi")
}

/// Asymptotic ₂F₀ route; `None` when the smallest term never drops below the
/// working tolerance.
pub fn tricomi_asymptotic(a: Complex64, c: Complex64, z: f64) -> Option<Complex64> {
    let b = a - c + 1.0;
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for n in 0..MAX_TERMS {
        let k = n as f64;
        term *= (a + k) * (b + k) / ((k + 1.0) * -z);
        let size = term.norm();
        if size == 0.0 {
            break;
        }
        if size > last {
            // past the smallest term without reaching tolerance
            return None;
        }
        sum += term;
        if size <= SERIES_TOL * sum.norm() {
            let prefactor = (-a * z.ln()).exp();
            return Some(prefactor * sum);
        }
        last = size;
    }
    let prefactor = (-a * z.ln()).exp();
    Some(prefactor * sum)
}
