//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the
//! figure criterion is also asserted on its own so that its status is
//! visible as a separate test result.

use std::io::Write;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use susy2::figures::{fig1, fig2};
use susy2::grid::trapezoid;
use susy2::numerov::numerov_spectrum;
use susy2::seeds::*;
use susy2::specfun::{gamma, kummer_1f1, tricomi_connection, tricomi_psi};
use susy2::transform::*;
use susy2::verify::*;
use susy2::{Grid, RealFunctionSamples};

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: &str, title: &str, o: &Outcome) {
    let status = if o.pass { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "[{status}] {id} {title}: {}", o.detail).unwrap();
}

fn wide() -> Grid {
    Grid::new(-10.0, 10.0, 2001).unwrap()
}

fn sech(z: Complex64) -> Complex64 {
    1.0 / z.cosh()
}

const K0: f64 = 1.0;
const PT_K: (f64, f64) = (0.5, 0.3);

fn pt_setup(grid: &Grid) -> (RealFunctionSamples, SeedFunction, TransformResult) {
    let v = PotentialModel::poschl_teller(K0).unwrap().sample(grid).unwrap();
    let e = energy_from_k(PT_K.0, PT_K.1).unwrap();
    let s = poschl_teller_seed(K0, e, DecaySide::Right, grid).unwrap();
    let tr = transform(&v, &s).unwrap();
    (v, s, tr)
}

/// tanh(k₀x₁) = k₀/κ with the seed's κ.
fn pt_complex_shift() -> Complex64 {
    let kappa = energy_from_k(PT_K.0, PT_K.1).unwrap().kappa();
    let z = K0 / kappa;
    0.5 * ((1.0 + z) / (1.0 - z)).ln() / K0
}

fn free_triviality() -> Outcome {
    let start = Instant::now();
    let g = wide();
    let v = PotentialModel::Free.sample(&g).unwrap();
    let mut worst = 0.0f64;
    for (k1, k2) in [(1.0, 1.0), (0.5, 0.3), (2.0, 0.1)] {
        for side in [DecaySide::Left, DecaySide::Right] {
            let s = free_seed(energy_from_k(k1, k2).unwrap(), side, &g).unwrap();
            let tr = transform(&v, &s).unwrap();
            worst = worst.max(tr.v_tilde.max_abs()).max(tr.v1.max_abs());
        }
    }
    let t = start.elapsed();
    Outcome {
        pass: worst < 1e-10 && t < Duration::from_secs(1),
        detail: format!("max(|Ṽ|, |V₁|) = {worst:.2e}, {t:.2?}"),
    }
}

fn soliton_displacement() -> Outcome {
    let start = Instant::now();
    let g = wide();
    let (_, _, tr) = pt_setup(&g);
    let (k1, k2) = PT_K;
    let x0 = (2.0 * K0 * k1 / (K0 * K0 + k1 * k1 + k2 * k2)).atanh();
    let worst = g
        .points()
        .iter()
        .zip(&tr.v_tilde.values)
        .map(|(x, vt)| (vt + 2.0 / ((x + x0).cosh().powi(2))).abs())
        .fold(0.0, f64::max);
    let t = start.elapsed();
    Outcome {
        pass: worst < 1e-8 && t < Duration::from_secs(1),
        detail: format!("x₀ = {x0:.15}, max|Ṽ + 2sech²(x+x₀)| = {worst:.2e}, {t:.2?}"),
    }
}

fn complex_soliton() -> Outcome {
    let g = wide();
    let (_, _, tr) = pt_setup(&g);
    let x1 = pt_complex_shift();
    let worst = g
        .points()
        .iter()
        .zip(&tr.v1.values)
        .map(|(&x, v1)| (v1 + 2.0 * sech(x + x1).powi(2)).norm())
        .fold(0.0, f64::max);
    Outcome { pass: worst < 1e-8, detail: format!("x₁ = {x1:.12}, max|V₁ + 2sech²(x+x₁)| = {worst:.2e}") }
}

fn ground_state_normalization() -> Outcome {
    let g = wide();
    let (_, s, _) = pt_setup(&g);
    let (k1, k2) = PT_K;
    let kappa = (Complex64::new(k1, k2).powi(2) - K0 * K0).sqrt().norm();
    let closed = K0 / kappa
        * (((K0 + k1) / k2).atan() / k2 + ((K0 - k1) / k2).atan() / k2).powf(-0.5);
    let x1 = pt_complex_shift();
    let profile: Vec<f64> = g.points().iter().map(|&x| sech(K0 * (x + x1)).norm()).collect();
    let quad = 1.0 / trapezoid(&profile.iter().map(|p| p * p).collect::<Vec<_>>(), g.h()).sqrt();
    let rel = (quad - closed).abs() / closed;

    // the normalized state itself has modulus closed·|sech k₀(x+x₁)|
    let state = partner_state_with_derivative(
        &pt_ground_state(K0, &g).unwrap(),
        &pt_ground_state_derivative(K0, &g).unwrap(),
        &s,
    )
    .unwrap();
    let shape = state
        .psi
        .values
        .iter()
        .zip(&profile)
        .map(|(p, q)| (p.norm() - closed * q).abs())
        .fold(0.0, f64::max)
        / closed;
    Outcome {
        pass: rel < 1e-6 && shape < 1e-6,
        detail: format!("closed form {closed:.12}, quadrature {quad:.12}, rel {rel:.2e}, profile gap {shape:.2e}"),
    }
}

fn oscillator_isospectrality() -> Outcome {
    let start = Instant::now();
    let g = Grid::new(-6.0, 6.0, 2001).unwrap();
    let v = PotentialModel::Oscillator.sample(&g).unwrap();
    let s = oscillator_seed(ComplexEnergy::new(10.0, 0.1).unwrap(), DecaySide::Right, &g).unwrap();
    let tr = transform(&v, &s).unwrap();
    let base = numerov_spectrum(&v, 6, (0.0, 12.0)).unwrap();
    let lo = tr.v_tilde.min() - 1.0;
    let partner = numerov_spectrum(&tr.v_tilde, 6, (lo, 12.0));
    let t = start.elapsed();
    let dev = |e: &[f64]| e.iter().enumerate().map(|(n, e)| (e - (2 * n + 1) as f64).abs()).fold(0.0, f64::max);
    let dv = dev(&base.energies());
    match partner {
        Ok(p) => {
            let dt = dev(&p.energies());
            Outcome {
                pass: dv < 1e-4 && dt < 1e-3 && t < Duration::from_secs(30),
                detail: format!("max|Eₙ − (2n+1)|: V {dv:.2e}, Ṽ {dt:.2e} (n = 0..5), {t:.2?}"),
            }
        }
        Err(e) => Outcome { pass: false, detail: format!("Ṽ spectrum failed: {e}") },
    }
}

fn complex_potential_real_energy() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;

    let m = PotentialModel::Oscillator;
    let g = verification_grid(&m);
    let s = oscillator_seed(ComplexEnergy::new(10.0, 0.1).unwrap(), DecaySide::Right, &g).unwrap();
    let tr = transform(&m.sample(&g).unwrap(), &s).unwrap();
    let (p, dp) = oscillator_ground_state(&g).unwrap();
    let st = partner_state_with_derivative(&p, &dp, &s).unwrap();
    let r = eigen_residual("oscillator", &tr.v1, &st.psi, 1.0, 1e-4).unwrap();
    let norm = l2_norm(&st.psi);
    pass &= r.pass && (norm - 1.0).abs() < 1e-12;
    parts.push(format!("oscillator E₀=1 residual {:.2e} norm {norm:.12}", r.norm));

    let m = PotentialModel::poschl_teller(K0).unwrap();
    let g = verification_grid(&m);
    let (_, s, tr) = pt_setup(&g);
    let st = partner_state_with_derivative(
        &pt_ground_state(K0, &g).unwrap(),
        &pt_ground_state_derivative(K0, &g).unwrap(),
        &s,
    )
    .unwrap();
    let r = eigen_residual("pt", &tr.v1, &st.psi, -K0 * K0, 1e-4).unwrap();
    let norm = l2_norm(&st.psi);
    pass &= r.pass && (norm - 1.0).abs() < 1e-12;
    parts.push(format!("PT E₀=−1 residual {:.2e} norm {norm:.12}", r.norm));

    Outcome { pass, detail: parts.join("; ") }
}

fn property_suite() -> Outcome {
    let models = [
        PotentialModel::Free,
        PotentialModel::poschl_teller(K0).unwrap(),
        PotentialModel::Oscillator,
    ];
    let mut failures = Vec::new();
    let mut count = 0;
    for model in &models {
        let smooth = default_grid(model);
        let fine = verification_grid(model);
        let e = match model {
            PotentialModel::Oscillator => ComplexEnergy::new(10.0, 0.1).unwrap(),
            PotentialModel::PoschlTeller { .. } => energy_from_k(PT_K.0, PT_K.1).unwrap(),
            _ => energy_from_k(1.0, 1.0).unwrap(),
        };
        for side in [DecaySide::Left, DecaySide::Right] {
            for g in [&smooth, &fine] {
                let s = closed_form_seed(model, e, side, g).unwrap();
                let w = normalized_wronskian(&s);
                if !check_nodeless(&w).nodeless {
                    failures.push(format!("{}/{side:?}: w has a node", model.name()));
                }
            }
            for r in certify(model, e, side, &smooth, &fine).unwrap() {
                count += 1;
                if !r.pass {
                    failures.push(format!("{}/{side:?}: {} {:.2e} > {:.2e}", model.name(), r.name, r.norm, r.tolerance));
                }
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{count} residual reports over 3 models × 2 sides, all within tolerance")
        } else {
            failures.join("; ")
        },
    }
}

struct FigureChecks {
    fig1_finite: bool,
    edge_gap: (f64, f64),
    fig2_nonnegative: bool,
    fig2_norm: f64,
    fig2_peaks: usize,
}

fn figure_checks() -> FigureChecks {
    let f1 = fig1().unwrap();
    let n = f1.x.len();
    let gap = |i: usize| (f1.v_tilde[i] - f1.x[i] * f1.x[i]).abs();
    let f2 = fig2().unwrap();
    FigureChecks {
        fig1_finite: f1.v_tilde.iter().all(|v| v.is_finite()),
        edge_gap: (gap(0), gap(n - 1)),
        fig2_nonnegative: f2.density.iter().all(|d| *d >= 0.0 && d.is_finite()),
        fig2_norm: f2.norm(),
        fig2_peaks: f2.peak_count(0.0),
    }
}

fn figure_reproduction() -> Outcome {
    let c = figure_checks();
    let edge_ok = c.edge_gap.0 < 0.05 && c.edge_gap.1 < 0.05;
    let norm_ok = (c.fig2_norm - 1.0).abs() < 1e-6;
    Outcome {
        pass: c.fig1_finite && edge_ok && c.fig2_nonnegative && norm_ok && c.fig2_peaks == 1,
        detail: format!(
            "fig1 finite {}, |Ṽ−x²| at x=−6 {:.3}, at x=6 {:.3} (need < 0.05); fig2 nonnegative {}, norm {:.9}, local maxima {} (need 1)",
            c.fig1_finite, c.edge_gap.0, c.edge_gap.1, c.fig2_nonnegative, c.fig2_norm, c.fig2_peaks
        ),
    }
}

fn special_function_floor() -> Outcome {
    let one = Complex64::new(1.0, 0.0);
    let pi = std::f64::consts::PI;
    let mut gamma_err = 0.0f64;
    for z in [Complex64::new(0.3, 0.7), Complex64::new(-2.6, 1.1), Complex64::new(4.2, -3.3), Complex64::new(-7.5, 0.2)] {
        let refl = gamma(z).unwrap() * gamma(one - z).unwrap() * (z * pi).sin() / pi;
        let rec = gamma(z + 1.0).unwrap() / (z * gamma(z).unwrap());
        gamma_err = gamma_err.max((refl - one).norm()).max((rec - one).norm());
    }
    let exp_err = (0..=36)
        .map(|k| {
            let z = k as f64;
            (kummer_1f1(one, one, z).unwrap().re - z.exp()).abs() / z.exp()
        })
        .fold(0.0, f64::max);
    let a = (one - Complex64::new(10.0, 0.1)) / 4.0;
    let half = Complex64::new(0.5, 0.0);
    let conn_err = [0.5, 4.0, 9.0]
        .iter()
        .map(|&z| {
            let lhs = tricomi_psi(a, half, z).unwrap();
            let rhs = tricomi_connection(a, half, z).unwrap();
            (lhs - rhs).norm() / rhs.norm()
        })
        .fold(0.0, f64::max);
    let dev: Vec<f64> = [25.0, 100.0, 400.0]
        .iter()
        .map(|&z| (tricomi_psi(a, half, z).unwrap() * Complex64::new(z, 0.0).powc(a) - 1.0).norm())
        .collect();
    let trend = dev.windows(2).all(|p| p[1] < p[0]) && dev[2] < 0.05;
    Outcome {
        pass: gamma_err < 1e-10 && exp_err < 1e-12 && conn_err <= 4.0 * f64::EPSILON && trend,
        detail: format!(
            "Γ {gamma_err:.1e}, ₁F₁(1,1;z)/eᶻ {exp_err:.1e}, connection {conn_err:.1e}, |Ψzᵃ−1| at z=25,100,400: {:.3e}, {:.3e}, {:.3e}",
            dev[0], dev[1], dev[2]
        ),
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, &str, fn() -> Outcome); 9] = [
        ("1", "free-particle triviality", free_triviality),
        ("2", "soliton displacement", soliton_displacement),
        ("3", "complex intermediate soliton", complex_soliton),
        ("4", "ground-state normalization constant", ground_state_normalization),
        ("5", "oscillator isospectrality", oscillator_isospectrality),
        ("6", "complex potential with real energy", complex_potential_real_energy),
        ("7", "property suite", property_suite),
        ("8", "figure reproduction", figure_reproduction),
        ("9", "special-function floor", special_function_floor),
    ];
    let mut failed = Vec::new();
    for (id, title, run) in criteria {
        let outcome = run();
        report(id, title, &outcome);
        if !outcome.pass && id != "8" {
            failed.push(id);
        }
    }
    // criterion 8 is asserted by `figure_criterion` below
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn figure_criterion() {
    let c = figure_checks();
    let mut failures = Vec::new();
    if !c.fig1_finite {
        failures.push("fig1 has non-finite Ṽ".to_string());
    }
    if c.edge_gap.0 >= 0.05 || c.edge_gap.1 >= 0.05 {
        failures.push(format!("|Ṽ−x²| at x=∓6 is {:.3}, {:.3}", c.edge_gap.0, c.edge_gap.1));
    }
    if !c.fig2_nonnegative {
        failures.push("fig2 density has negative or non-finite samples".to_string());
    }
    if (c.fig2_norm - 1.0).abs() >= 1e-6 {
        failures.push(format!("fig2 norm {}", c.fig2_norm));
    }
    if c.fig2_peaks != 1 {
        failures.push(format!("|ψ¹₀|² has {} local maxima", c.fig2_peaks));
    }
    assert!(failures.is_empty(), "{}", failures.join("; "));
}
