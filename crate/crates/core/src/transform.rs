//! The 2-SUSY transformation with factorization energies ε₁, ε̄₁.
//!
//! Everything that defines a potential is assembled pointwise from the seed's
//! analytic samples (u₁, u₁′) and the substitution u₁″ = (V − ε₁)u₁:
//!
//! * w  = Im(u₁ ū₁′)/Im ε₁, with w′ = |u₁|²
//! * η  = −w′/w = −|u₁|²/w
//! * Ṽ  = V − 2(w′/w)′ = V − 2[2 Re(ū₁u₁′)/w − (|u₁|²/w)²]
//! * β₁ = u₁′/u₁,  V₁ = V − 2β₁′ = −V + 2ε₁ + 2β₁²
//! * α₁ = −β₁,     α₂ = β₁ + (ε₁ − ε̄₁)/(β₁ − β̄₁)
//!
//! Finite differences enter only through the operators [`apply_a`] and
//! [`apply_a1`] and through γ, whose η′ term is differenced.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{trapezoid, ComplexFunctionSamples, Grid, RealFunctionSamples};
use crate::seeds::{ComplexEnergy, SeedFunction};
use crate::stencil::{first_derivative, interior_max, second_derivative, EDGE};

/// Slack allowed for sample-to-sample decreases of w, relative to max|w|.
pub const MONOTONE_SLACK: f64 = 1e-12;

/// |Im β₁| below this makes the Bäcklund denominator degenerate.
pub const BACKLUND_DENOM_MIN: f64 = 1e-10;

const ZERO_STATE: f64 = 1e-12;

/// Result of the nodelessness gate on w.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NodelessCheck {
    pub nodeless: bool,
    /// min|w| / max|w| over the grid, reported for conditioning only.
    pub min_abs_ratio: f64,
    /// First grid point where w vanishes or changes sign.
    pub node_at: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct TransformDiagnostics {
    pub min_abs_ratio: f64,
    /// Largest sample-to-sample decrease of w relative to max|w|.
    pub w_max_decrease: f64,
    pub w_monotone: bool,
    /// max|γ − d + V − η²/2 + η′/2|.
    pub gamma_relation_residual: f64,
    pub max_abs_im_gamma: f64,
    /// max |η·Im β₁ − Im ε₁| / Im ε₁ over points with |Im β₁| > 1e-10.
    pub eta_beta_consistency: f64,
    /// max |α₂ + α₁ − η|.
    pub backlund_identity: f64,
    /// Interior max |η′ (differenced) − (Ṽ − V)/2|.
    pub eta_prime_consistency: f64,
    pub weak_decay: bool,
}

/// Everything produced by one transformation.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformResult {
    pub w: RealFunctionSamples,
    pub eta: RealFunctionSamples,
    /// γ = d − V + η²/2 − η′/2, real in exact arithmetic.
    pub gamma_coef: ComplexFunctionSamples,
    pub v_tilde: RealFunctionSamples,
    pub v1: ComplexFunctionSamples,
    pub alpha1: ComplexFunctionSamples,
    pub alpha2: ComplexFunctionSamples,
    pub energy: ComplexEnergy,
    pub diagnostics: TransformDiagnostics,
}

impl TransformResult {
    pub fn grid(&self) -> &Grid {
        &self.w.grid
    }
}

/// w = W(u₁, ū₁)/(2i Im ε₁) = Im(u₁ ū₁′)/Im ε₁.
pub fn normalized_wronskian(seed: &SeedFunction) -> RealFunctionSamples {
    let im_eps = seed.energy().eps1().im;
    let values = seed
        .u()
        .iter()
        .zip(seed.du())
        .map(|(u, du)| (u * du.conj()).im / im_eps)
        .collect();
    RealFunctionSamples { grid: *seed.grid(), values }
}

/// w is nodeless when it keeps one strict sign over the whole grid.
pub fn check_nodeless(w: &RealFunctionSamples) -> NodelessCheck {
    let max = w.max_abs();
    let min = w.values.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()));
    let sign = w.values.first().map(|v| v.signum()).unwrap_or(0.0);
    let node_at = w
        .values
        .iter()
        .position(|v| *v == 0.0 || v.signum() != sign)
        .map(|i| w.grid.x(i));
    let ratio = if max > 0.0 { min / max } else { 0.0 };
    NodelessCheck { nodeless: node_at.is_none() && min > 0.0, min_abs_ratio: ratio, node_at }
}

fn gate(w: &RealFunctionSamples) -> Result<NodelessCheck> {
    let check = check_nodeless(w);
    if !check.nodeless {
        return Err(Error::SingularTransform { x: check.node_at.unwrap_or(w.grid.x_min()) });
    }
    Ok(check)
}

/// η = −w′/w with w′ = |u₁|² taken exactly.
pub fn eta_from_w(w: &RealFunctionSamples, seed: &SeedFunction) -> Result<RealFunctionSamples> {
    w.grid.ensure_same(seed.grid())?;
    gate(w)?;
    let values = seed.u().iter().zip(&w.values).map(|(u, w)| -u.norm_sqr() / w).collect();
    RealFunctionSamples::new(w.grid, values)
}

/// γ = d − V + η²/2 − η′/2, with η′ from the 4th-order stencil.
pub fn gamma_coefficient(
    eta: &RealFunctionSamples,
    v: &RealFunctionSamples,
    energy: ComplexEnergy,
) -> Result<ComplexFunctionSamples> {
    eta.grid.ensure_same(&v.grid)?;
    let deta = first_derivative(&eta.values, eta.grid.h());
    let d = energy.d();
    let values = (0..eta.values.len())
        .map(|i| {
            let e = eta.values[i];
            Complex64::new(d - v.values[i] + 0.5 * e * e - 0.5 * deta[i], 0.0)
        })
        .collect();
    ComplexFunctionSamples::new(eta.grid, values)
}

/// Ṽ = V − 2(w′/w)′, assembled from analytic seed data.
pub fn partner_potential(
    v: &RealFunctionSamples,
    w: &RealFunctionSamples,
    seed: &SeedFunction,
) -> Result<RealFunctionSamples> {
    v.grid.ensure_same(&w.grid)?;
    w.grid.ensure_same(seed.grid())?;
    gate(w)?;
    let values = (0..v.values.len())
        .map(|i| {
            let u = seed.u()[i];
            let du = seed.du()[i];
            let q = u.norm_sqr() / w.values[i];
            let log_dd = 2.0 * (u.conj() * du).re / w.values[i] - q * q;
            v.values[i] - 2.0 * log_dd
        })
        .collect();
    RealFunctionSamples::new(v.grid, values)
}

/// β₁ = u₁′/u₁.
pub fn beta1(seed: &SeedFunction) -> ComplexFunctionSamples {
    let values = seed.u().iter().zip(seed.du()).map(|(u, du)| du / u).collect();
    ComplexFunctionSamples { grid: *seed.grid(), values }
}

/// V₁ = V − 2β₁′ with β₁′ = V − ε₁ − β₁².
pub fn intermediate_potential(v: &RealFunctionSamples, seed: &SeedFunction) -> Result<ComplexFunctionSamples> {
    v.grid.ensure_same(seed.grid())?;
    let eps = seed.energy().eps1();
    let b = beta1(seed);
    let values = v
        .values
        .iter()
        .zip(&b.values)
        .map(|(&vx, &bx)| vx - 2.0 * ((vx - eps) - bx * bx))
        .collect();
    ComplexFunctionSamples::new(v.grid, values)
}

/// Finite-difference Bäcklund step α₂ = β₁ + (ε₁ − ε̄₁)/(β₁ − β̄₁).
pub fn alpha2_backlund(beta1: &ComplexFunctionSamples, energy: ComplexEnergy) -> Result<ComplexFunctionSamples> {
    let num = energy.eps1() - energy.eps2();
    let mut values = Vec::with_capacity(beta1.values.len());
    for (i, b) in beta1.values.iter().enumerate() {
        if b.im.abs() <= BACKLUND_DENOM_MIN {
            return Err(Error::DegenerateDenominator { x: beta1.grid.x(i) });
        }
        values.push(b + num / (b - b.conj()));
    }
    ComplexFunctionSamples::new(beta1.grid, values)
}

/// A f = f″ + η f′ + γ f.
pub fn apply_a(
    f: &ComplexFunctionSamples,
    eta: &RealFunctionSamples,
    gamma: &ComplexFunctionSamples,
) -> Result<ComplexFunctionSamples> {
    f.grid.ensure_same(&eta.grid)?;
    f.grid.ensure_same(&gamma.grid)?;
    let h = f.grid.h();
    let d1 = first_derivative(&f.values, h);
    let d2 = second_derivative(&f.values, h);
    let values = (0..f.values.len())
        .map(|i| d2[i] + d1[i] * eta.values[i] + gamma.values[i] * f.values[i])
        .collect();
    ComplexFunctionSamples::new(f.grid, values)
}

/// A f = f′ + α f.
pub fn apply_a1(f: &ComplexFunctionSamples, alpha: &ComplexFunctionSamples) -> Result<ComplexFunctionSamples> {
    f.grid.ensure_same(&alpha.grid)?;
    let d1 = first_derivative(&f.values, f.grid.h());
    let values = (0..f.values.len()).map(|i| d1[i] + alpha.values[i] * f.values[i]).collect();
    ComplexFunctionSamples::new(f.grid, values)
}

/// A⁻ f = −f′ + α f (not the adjoint when α is complex).
pub fn apply_a1_minus(f: &ComplexFunctionSamples, alpha: &ComplexFunctionSamples) -> Result<ComplexFunctionSamples> {
    f.grid.ensure_same(&alpha.grid)?;
    let d1 = first_derivative(&f.values, f.grid.h());
    let values = (0..f.values.len()).map(|i| -d1[i] + alpha.values[i] * f.values[i]).collect();
    ComplexFunctionSamples::new(f.grid, values)
}

/// ψ̃ₙ = Aψₙ/|Eₙ − ε₁|, an eigenfunction of Ṽ for the level Eₙ.
pub fn transformed_eigenfunction(
    psi_n: &RealFunctionSamples,
    e_n: f64,
    tr: &TransformResult,
) -> Result<ComplexFunctionSamples> {
    let a_psi = apply_a(&psi_n.to_complex(), &tr.eta, &tr.gamma_coef)?;
    let scale = 1.0 / (e_n - tr.energy.eps1()).norm();
    let values = a_psi.values.iter().map(|v| v * scale).collect();
    ComplexFunctionSamples::new(psi_n.grid, values)
}

/// Normalized ψ¹ₙ = cₙ A₁ψₙ of the complex intermediate potential V₁.
#[derive(Debug, Clone, PartialEq)]
pub struct PartnerState {
    pub psi: ComplexFunctionSamples,
    /// cₙ > 0 fixed by unit trapezoidal norm.
    pub c_n: f64,
}

/// ψ¹ₙ from samples of ψₙ alone; ψₙ′ is differenced.
pub fn complex_partner_state(psi_n: &RealFunctionSamples, seed: &SeedFunction) -> Result<PartnerState> {
    let d = first_derivative(&psi_n.values, psi_n.grid.h());
    let dpsi = RealFunctionSamples::new(psi_n.grid, d)?;
    partner_state_with_derivative(psi_n, &dpsi, seed)
}

/// ψ¹ₙ = cₙ(ψₙ′ − β₁ψₙ) with ψₙ′ supplied, e.g. from a closed form.
pub fn partner_state_with_derivative(
    psi_n: &RealFunctionSamples,
    dpsi_n: &RealFunctionSamples,
    seed: &SeedFunction,
) -> Result<PartnerState> {
    psi_n.grid.ensure_same(seed.grid())?;
    psi_n.grid.ensure_same(&dpsi_n.grid)?;
    let raw: Vec<Complex64> = (0..psi_n.values.len())
        .map(|i| dpsi_n.values[i] - seed.du()[i] / seed.u()[i] * psi_n.values[i])
        .collect();
    let norm = trapezoid(&raw.iter().map(|v| v.norm_sqr()).collect::<Vec<_>>(), psi_n.grid.h()).sqrt();
    if !(norm >= ZERO_STATE) {
        return Err(Error::ZeroState);
    }
    let c_n = 1.0 / norm;
    let values = raw.iter().map(|v| v * c_n).collect();
    Ok(PartnerState { psi: ComplexFunctionSamples::new(psi_n.grid, values)?, c_n })
}

/// ψ₀ = √(k₀/2) sech(k₀x), the bound state of −2k₀² sech²(k₀x) at E₀ = −k₀².
pub fn pt_ground_state(k0: f64, grid: &Grid) -> Result<RealFunctionSamples> {
    if !(k0 > 0.0) {
        return Err(Error::InvalidPotential(format!("k0 = {k0} must be positive")));
    }
    let amp = (0.5 * k0).sqrt();
    RealFunctionSamples::from_fn(*grid, |x| amp / (k0 * x).cosh())
}

/// ψ₀′ = −k₀ tanh(k₀x) ψ₀.
pub fn pt_ground_state_derivative(k0: f64, grid: &Grid) -> Result<RealFunctionSamples> {
    let psi = pt_ground_state(k0, grid)?;
    let values = grid.points().iter().zip(&psi.values).map(|(x, p)| -k0 * (k0 * x).tanh() * p).collect();
    RealFunctionSamples::new(*grid, values)
}

/// ψ₀ = π^(−1/4) e^(−x²/2) for V = x², E₀ = 1, and its derivative.
pub fn oscillator_ground_state(grid: &Grid) -> Result<(RealFunctionSamples, RealFunctionSamples)> {
    let amp = std::f64::consts::PI.powf(-0.25);
    let psi = RealFunctionSamples::from_fn(*grid, |x| amp * (-0.5 * x * x).exp())?;
    let dpsi = RealFunctionSamples::from_fn(*grid, |x| -x * amp * (-0.5 * x * x).exp())?;
    Ok((psi, dpsi))
}

/// Runs the whole construction for base potential samples `v` and a seed.
pub fn transform(v: &RealFunctionSamples, seed: &SeedFunction) -> Result<TransformResult> {
    v.grid.ensure_same(seed.grid())?;
    let grid = v.grid;
    let energy = seed.energy();
    let w = normalized_wronskian(seed);
    let check = gate(&w)?;

    let eta = eta_from_w(&w, seed)?;
    let gamma_coef = gamma_coefficient(&eta, v, energy)?;
    let v_tilde = partner_potential(v, &w, seed)?;
    let v1 = intermediate_potential(v, seed)?;
    let b1 = beta1(seed);
    let alpha1 = ComplexFunctionSamples::new(grid, b1.values.iter().map(|b| -b).collect())?;
    let alpha2 = alpha2_backlund(&b1, energy)?;

    let n = grid.len();
    let max_w = w.max_abs();
    let w_max_decrease = w
        .values
        .windows(2)
        .map(|p| (p[0] - p[1]).max(0.0) / max_w)
        .fold(0.0, f64::max);

    let deta = first_derivative(&eta.values, grid.h());
    let d = energy.d();
    let gamma_relation_residual = (0..n)
        .map(|i| {
            let e = eta.values[i];
            (gamma_coef.values[i] - d + v.values[i] - 0.5 * e * e + 0.5 * deta[i]).norm()
        })
        .fold(0.0, f64::max);
    let max_abs_im_gamma = gamma_coef.values.iter().fold(0.0f64, |m, g| m.max(g.im.abs()));

    let im_eps = energy.eps1().im;
    let eta_beta_consistency = b1
        .values
        .iter()
        .zip(&eta.values)
        .filter(|(b, _)| b.im.abs() > BACKLUND_DENOM_MIN)
        .map(|(b, e)| (e * b.im - im_eps).abs() / im_eps)
        .fold(0.0, f64::max);
    let backlund_identity = (0..n)
        .map(|i| (alpha2.values[i] + alpha1.values[i] - eta.values[i]).norm())
        .fold(0.0, f64::max);
    let eta_prime_consistency = interior_max(
        (0..n).map(|i| (deta[i] - 0.5 * (v_tilde.values[i] - v.values[i])).abs()),
        n,
        EDGE,
    );

    let diagnostics = TransformDiagnostics {
        min_abs_ratio: check.min_abs_ratio,
        w_max_decrease,
        w_monotone: w_max_decrease <= MONOTONE_SLACK,
        gamma_relation_residual,
        max_abs_im_gamma,
        eta_beta_consistency,
        backlund_identity,
        eta_prime_consistency,
        weak_decay: seed.diagnostics().weak_decay,
    };

    Ok(TransformResult { w, eta, gamma_coef, v_tilde, v1, alpha1, alpha2, energy, diagnostics })
}
