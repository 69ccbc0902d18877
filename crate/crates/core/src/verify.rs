//! Residual checks that certify a transformation independently of how it was
//! assembled. All derivatives here come from the 4th-order stencils.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::grid::{trapezoid, ComplexFunctionSamples, Grid, RealFunctionSamples};
use crate::seeds::{closed_form_seed, ComplexEnergy, DecaySide, PotentialModel, SeedFunction};
use crate::stencil::{first_derivative, interior_max, second_derivative, EDGE};
use crate::transform::{apply_a, apply_a1, apply_a1_minus, transform, TransformResult, MONOTONE_SLACK};

/// Default number of Gaussian probe functions.
pub const DEFAULT_PROBES: usize = 10;

/// Tolerance for probe-based operator identities.
pub const OPERATOR_TOL: f64 = 1e-4;

/// Samples skipped per edge once two stencils are stacked.
pub const NESTED_EDGE: usize = 2 * EDGE;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub name: String,
    pub norm: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualReport {
    pub fn new(name: impl Into<String>, norm: f64, tolerance: f64) -> Self {
        ResidualReport { name: name.into(), norm, tolerance, pass: norm <= tolerance }
    }
}

/// Which first-order Riccati convention a superpotential follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiccatiForm {
    /// β′ + β² = V − ε
    Beta,
    /// −α′ + α² = V − ε
    Alpha,
}

/// L² norm by the trapezoidal rule.
pub fn l2_norm(f: &ComplexFunctionSamples) -> f64 {
    trapezoid(&f.abs_sq(), f.grid.h()).sqrt()
}

pub fn riccati_residual(
    name: &str,
    beta: &ComplexFunctionSamples,
    v: &RealFunctionSamples,
    eps: Complex64,
    form: RiccatiForm,
) -> Result<ResidualReport> {
    beta.grid.ensure_same(&v.grid)?;
    riccati_residual_complex(name, beta, &real_as_complex(v), eps, form)
}

/// Same check against a complex potential such as V₁.
pub fn riccati_residual_complex(
    name: &str,
    beta: &ComplexFunctionSamples,
    v: &[Complex64],
    eps: Complex64,
    form: RiccatiForm,
) -> Result<ResidualReport> {
    if v.len() != beta.values.len() {
        return Err(crate::error::Error::GridMismatch);
    }
    let d = first_derivative(&beta.values, beta.grid.h());
    let sign = match form {
        RiccatiForm::Beta => 1.0,
        RiccatiForm::Alpha => -1.0,
    };
    let n = beta.values.len();
    let res = (0..n).map(|i| (d[i] * sign + beta.values[i] * beta.values[i] - v[i] + eps).norm());
    let norm = interior_max(res, n, EDGE);
    let v_max = v.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    let tol = 1e-6 * (1.0 + v_max + eps.norm());
    Ok(ResidualReport::new(name, norm, tol))
}

/// Residual of ηη″ − (η′)²/2 + 2η²(η²/4 − η′ − V + d) + 2c.
pub fn eta_ode_residual_of(
    eta: &RealFunctionSamples,
    v: &RealFunctionSamples,
    energy: ComplexEnergy,
) -> Result<ResidualReport> {
    eta.grid.ensure_same(&v.grid)?;
    let h = eta.grid.h();
    let d1 = first_derivative(&eta.values, h);
    let d2 = second_derivative(&eta.values, h);
    let (d, c) = (energy.d(), energy.c());
    let n = eta.values.len();
    let res = (0..n).map(|i| {
        let e = eta.values[i];
        (e * d2[i] - 0.5 * d1[i] * d1[i] + 2.0 * e * e * (0.25 * e * e - d1[i] - v.values[i] + d) + 2.0 * c).abs()
    });
    let norm = interior_max(res, n, EDGE);
    let tol = 1e-4 * (1.0 + eta.max_abs()).powi(4);
    Ok(ResidualReport::new("eta_ode", norm, tol))
}

pub fn eta_ode_residual(tr: &TransformResult, v: &RealFunctionSamples) -> Result<ResidualReport> {
    eta_ode_residual_of(&tr.eta, v, tr.energy)
}

/// Gaussian bumps spread evenly over the interior of the grid.
pub fn probe_functions(grid: &Grid, count: usize) -> Vec<ComplexFunctionSamples> {
    let count = count.max(1);
    let span = grid.x_max() - grid.x_min();
    let spacing = span / (count + 1) as f64;
    let sigma = spacing / 3.0;
    (1..=count)
        .map(|j| {
            let c = grid.x_min() + j as f64 * spacing;
            let values = grid
                .points()
                .iter()
                .map(|x| Complex64::new((-(x - c) * (x - c) / (2.0 * sigma * sigma)).exp(), 0.0))
                .collect();
            ComplexFunctionSamples { grid: *grid, values }
        })
        .collect()
}

/// (−D² + V) f
pub fn apply_hamiltonian(f: &ComplexFunctionSamples, v: &[Complex64]) -> ComplexFunctionSamples {
    let d2 = second_derivative(&f.values, f.grid.h());
    let values = (0..f.values.len()).map(|i| -d2[i] + v[i] * f.values[i]).collect();
    ComplexFunctionSamples { grid: f.grid, values }
}

fn real_as_complex(v: &RealFunctionSamples) -> Vec<Complex64> {
    v.values.iter().map(|&x| Complex64::new(x, 0.0)).collect()
}

fn relative_gap(lhs: &ComplexFunctionSamples, rhs: &ComplexFunctionSamples, scale: f64) -> f64 {
    let n = lhs.values.len();
    let diff = (0..n).map(|i| (lhs.values[i] - rhs.values[i]).norm());
    interior_max(diff, n, NESTED_EDGE) / scale.max(1.0)
}

/// max over probes of ‖(−D² + Ṽ)Af − A(−D² + V)f‖ / max(1, ‖Af‖).
pub fn intertwining_residual(
    v: &RealFunctionSamples,
    v_tilde: &RealFunctionSamples,
    tr: &TransformResult,
    probes: usize,
) -> Result<ResidualReport> {
    v.grid.ensure_same(&v_tilde.grid)?;
    v.grid.ensure_same(tr.grid())?;
    let vc = real_as_complex(v);
    let vtc = real_as_complex(v_tilde);
    let mut worst = 0.0f64;
    for f in probe_functions(&v.grid, probes) {
        let af = apply_a(&f, &tr.eta, &tr.gamma_coef)?;
        let lhs = apply_hamiltonian(&af, &vtc);
        let rhs = apply_a(&apply_hamiltonian(&f, &vc), &tr.eta, &tr.gamma_coef)?;
        let scale = interior_max(af.values.iter().map(|z| z.norm()), af.values.len(), EDGE);
        worst = worst.max(relative_gap(&lhs, &rhs, scale));
    }
    Ok(ResidualReport::new("intertwining", worst, OPERATOR_TOL))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factorization {
    /// H = A₁⁻A₁ + ε₁
    H,
    /// H₁ = A₁A₁⁻ + ε₁
    H1Lower,
    /// H₁ = A₂⁻A₂ + ε̄₁
    H1Upper,
    /// Ĥ = A₂A₂⁻ + ε̄₁
    Htilde,
}

impl Factorization {
    pub const ALL: [Factorization; 4] =
        [Factorization::H, Factorization::H1Lower, Factorization::H1Upper, Factorization::Htilde];

    pub fn label(self) -> &'static str {
        match self {
            Factorization::H => "factorization_H",
            Factorization::H1Lower => "factorization_H1_lower",
            Factorization::H1Upper => "factorization_H1_upper",
            Factorization::Htilde => "factorization_Htilde",
        }
    }
}

pub fn factorization_residual(
    tr: &TransformResult,
    v: &RealFunctionSamples,
    v_tilde: &RealFunctionSamples,
    which: Factorization,
    probes: usize,
) -> Result<ResidualReport> {
    v.grid.ensure_same(tr.grid())?;
    v_tilde.grid.ensure_same(tr.grid())?;
    let (eps, alpha, target): (Complex64, &ComplexFunctionSamples, Vec<Complex64>) = match which {
        Factorization::H => (tr.energy.eps1(), &tr.alpha1, real_as_complex(v)),
        Factorization::H1Lower => (tr.energy.eps1(), &tr.alpha1, tr.v1.values.clone()),
        Factorization::H1Upper => (tr.energy.eps2(), &tr.alpha2, tr.v1.values.clone()),
        Factorization::Htilde => (tr.energy.eps2(), &tr.alpha2, real_as_complex(v_tilde)),
    };
    let lower_first = matches!(which, Factorization::H | Factorization::H1Upper);
    let mut worst = 0.0f64;
    for f in probe_functions(&v.grid, probes) {
        let product = if lower_first {
            apply_a1_minus(&apply_a1(&f, alpha)?, alpha)?
        } else {
            apply_a1(&apply_a1_minus(&f, alpha)?, alpha)?
        };
        let lhs = ComplexFunctionSamples {
            grid: f.grid,
            values: product.values.iter().zip(&f.values).map(|(p, fx)| p + eps * fx).collect(),
        };
        let rhs = apply_hamiltonian(&f, &target);
        let scale = interior_max(rhs.values.iter().map(|z| z.norm()), rhs.values.len(), EDGE);
        worst = worst.max(relative_gap(&lhs, &rhs, scale));
    }
    Ok(ResidualReport::new(which.label(), worst, OPERATOR_TOL))
}

/// η A₁ f = (H − ε₁) f + A f on probe functions.
pub fn operator_relation_residual(tr: &TransformResult, v: &RealFunctionSamples, probes: usize) -> Result<ResidualReport> {
    v.grid.ensure_same(tr.grid())?;
    let vc = real_as_complex(v);
    let eps = tr.energy.eps1();
    let mut worst = 0.0f64;
    for f in probe_functions(&v.grid, probes) {
        let a1f = apply_a1(&f, &tr.alpha1)?;
        let lhs = ComplexFunctionSamples {
            grid: f.grid,
            values: a1f.values.iter().zip(&tr.eta.values).map(|(a, e)| a * *e).collect(),
        };
        let hf = apply_hamiltonian(&f, &vc);
        let af = apply_a(&f, &tr.eta, &tr.gamma_coef)?;
        let rhs = ComplexFunctionSamples {
            grid: f.grid,
            values: (0..f.values.len()).map(|i| hf.values[i] - eps * f.values[i] + af.values[i]).collect(),
        };
        let scale = interior_max(af.values.iter().map(|z| z.norm()), af.values.len(), EDGE);
        worst = worst.max(relative_gap(&lhs, &rhs, scale));
    }
    Ok(ResidualReport::new("operator_relation", worst, OPERATOR_TOL))
}

/// V₁ as implied by each factorization of H₁: α₁² + α₁′ + ε₁ and
/// α₂² − α₂′ + ε̄₁.
pub fn implied_v1(tr: &TransformResult) -> (Vec<Complex64>, Vec<Complex64>) {
    let h = tr.grid().h();
    let d1 = first_derivative(&tr.alpha1.values, h);
    let d2 = first_derivative(&tr.alpha2.values, h);
    let eps = tr.energy.eps1();
    let lower = tr.alpha1.values.iter().zip(&d1).map(|(a, da)| a * a + da + eps).collect();
    let upper = tr.alpha2.values.iter().zip(&d2).map(|(a, da)| a * a - da + eps.conj()).collect();
    (lower, upper)
}

pub fn v1_factorizations_agree(tr: &TransformResult, tolerance: f64) -> ResidualReport {
    let (lower, upper) = implied_v1(tr);
    let n = lower.len();
    let norm = interior_max((0..n).map(|i| (lower[i] - upper[i]).norm()), n, EDGE);
    ResidualReport::new("v1_factorizations_agree", norm, tolerance)
}

/// max|D w − |u₁|²| relative to max|u₁|²; tolerance 10h².
pub fn wronskian_derivative_residual(w: &RealFunctionSamples, seed: &SeedFunction) -> Result<ResidualReport> {
    w.grid.ensure_same(seed.grid())?;
    let dw = first_derivative(&w.values, w.grid.h());
    let mod2: Vec<f64> = seed.u().iter().map(|u| u.norm_sqr()).collect();
    let scale = mod2.iter().fold(0.0f64, |m, v| m.max(*v));
    let n = dw.len();
    let norm = interior_max((0..n).map(|i| (dw[i] - mod2[i]).abs() / scale), n, EDGE);
    let h = w.grid.h();
    Ok(ResidualReport::new("wronskian_derivative", norm, 10.0 * h * h))
}

/// ‖(−D² + V₁)ψ − Eψ‖ for a state of the complex potential, in the same L²
/// norm that normalizes ψ (trapezoid over the interior).
pub fn eigen_residual(
    name: &str,
    potential: &ComplexFunctionSamples,
    psi: &ComplexFunctionSamples,
    energy: f64,
    tolerance: f64,
) -> Result<ResidualReport> {
    potential.grid.ensure_same(&psi.grid)?;
    let hpsi = apply_hamiltonian(psi, &potential.values);
    let n = psi.values.len();
    let sq: Vec<f64> = (NESTED_EDGE..n - NESTED_EDGE)
        .map(|i| (hpsi.values[i] - energy * psi.values[i]).norm_sqr())
        .collect();
    let norm = trapezoid(&sq, psi.grid.h()).sqrt();
    Ok(ResidualReport::new(name, norm, tolerance))
}

/// Checks whose differenced quantities (w, η, γ, probes) are smooth on the
/// scale of the grid.
pub fn smooth_reports(v: &RealFunctionSamples, seed: &SeedFunction, tr: &TransformResult) -> Result<Vec<ResidualReport>> {
    let eta_scale = 1.0 + tr.eta.max_abs();
    Ok(vec![
        ResidualReport::new("seed_schrodinger", seed.schrodinger_residual(v)?, seed.schrodinger_tolerance()),
        wronskian_derivative_residual(&tr.w, seed)?,
        ResidualReport::new("w_monotone", tr.diagnostics.w_max_decrease, MONOTONE_SLACK),
        ResidualReport::new("eta_beta_consistency", tr.diagnostics.eta_beta_consistency, 1e-8),
        ResidualReport::new("backlund_identity", tr.diagnostics.backlund_identity, 1e-10 * eta_scale),
        eta_ode_residual(tr, v)?,
        intertwining_residual(v, &tr.v_tilde, tr, DEFAULT_PROBES)?,
        operator_relation_residual(tr, v, DEFAULT_PROBES)?,
    ])
}

/// Checks that difference β₁ or α₁, α₂ directly.
pub fn superpotential_reports(v: &RealFunctionSamples, tr: &TransformResult) -> Result<Vec<ResidualReport>> {
    let eps = tr.energy.eps1();
    let beta = ComplexFunctionSamples {
        grid: tr.alpha1.grid,
        values: tr.alpha1.values.iter().map(|a| -a).collect(),
    };
    let mut out = vec![
        riccati_residual("riccati_beta1", &beta, v, eps, RiccatiForm::Beta)?,
        riccati_residual("riccati_alpha1", &tr.alpha1, v, eps, RiccatiForm::Alpha)?,
        riccati_residual_complex("riccati_alpha2", &tr.alpha2, &tr.v1.values, eps.conj(), RiccatiForm::Alpha)?,
    ];
    for which in Factorization::ALL {
        out.push(factorization_residual(tr, v, &tr.v_tilde, which, DEFAULT_PROBES)?);
    }
    Ok(out)
}

/// Every check on a single grid.
pub fn standard_reports(
    v: &RealFunctionSamples,
    seed: &SeedFunction,
    tr: &TransformResult,
) -> Result<Vec<ResidualReport>> {
    let mut out = smooth_reports(v, seed, tr)?;
    out.extend(superpotential_reports(v, tr)?);
    Ok(out)
}

/// Builds the seed and transformation on `smooth` and on `superpotential`
/// and runs each group of checks on its grid.
pub fn certify(
    model: &PotentialModel,
    energy: ComplexEnergy,
    side: DecaySide,
    smooth: &Grid,
    superpotential: &Grid,
) -> Result<Vec<ResidualReport>> {
    let run = |grid: &Grid| -> Result<(RealFunctionSamples, SeedFunction, TransformResult)> {
        let v = model.sample(grid)?;
        let seed = closed_form_seed(model, energy, side, grid)?;
        let tr = transform(&v, &seed)?;
        Ok((v, seed, tr))
    };
    let (v, seed, tr) = run(smooth)?;
    let mut out = smooth_reports(&v, &seed, &tr)?;
    if smooth == superpotential {
        out.extend(superpotential_reports(&v, &tr)?);
    } else {
        let (v, _, tr) = run(superpotential)?;
        out.extend(superpotential_reports(&v, &tr)?);
    }
    Ok(out)
}

/// Grid used when none is configured.
pub fn default_grid(model: &PotentialModel) -> Grid {
    match model {
        PotentialModel::Oscillator => Grid::new(-6.0, 6.0, 1201),
        PotentialModel::Tabulated(v) => Ok(v.grid),
        _ => Grid::new(-10.0, 10.0, 2001),
    }
    .expect("static grid")
}

/// Grid on which the finite-difference checks resolve β₁ = u₁′/u₁.
///
/// β₁ has complex poles at the zeros of u₁. For the oscillator at ε₁ = 10+0.1i
/// they sit about 0.02 from the real axis, so the transform's default grid
/// (h = 0.01) cannot difference β₁ to the Riccati tolerance.
pub fn verification_grid(model: &PotentialModel) -> Grid {
    match model {
        PotentialModel::Free => Grid::new(-10.0, 10.0, 2001),
        PotentialModel::PoschlTeller { .. } => Grid::new(-10.0, 10.0, 8001),
        PotentialModel::Oscillator => Grid::new(-6.0, 6.0, 144_001),
        PotentialModel::Tabulated(v) => Ok(v.grid),
    }
    .expect("static grid")
}
