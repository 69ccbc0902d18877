use std::io::Write;
use std::path::Path;

use serde::Serialize;
use susy2::figures::{density_figure, potential_figure};
use susy2::numerov::{numerov_spectrum, SpectrumResult};
use susy2::seeds::{closed_form_seed, SeedDiagnostics};
use susy2::transform::{transform, TransformDiagnostics, TransformResult};
use susy2::verify::{certify, standard_reports, ResidualReport};
use susy2::{ComplexEnergy, Error, Grid, PotentialModel, RealFunctionSamples};

use crate::config::{ConfigEcho, ConfigError, FigureArgs, RunConfig, SpectrumArgs, Which};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_SINGULAR: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

/// Tolerance on max|Eₙ(Ṽ) − Eₙ(V)|.
pub const ISOSPECTRAL_TOL: f64 = 1e-3;

#[derive(Debug)]
pub enum Failure {
    Config(String),
    Singular(f64),
    Numerical(Error),
    Unverified,
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Config(_) => EXIT_CONFIG,
            Failure::Singular(_) => EXIT_SINGULAR,
            Failure::Numerical(_) | Failure::Unverified => EXIT_FAILED,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Config(m) => format!("configuration error: {m}"),
            Failure::Singular(x) => format!("singular transformation: w vanishes or changes sign near x = {x}"),
            Failure::Numerical(e) => format!("numerical failure: {e}"),
            Failure::Unverified => "verification failed: at least one check is out of tolerance".into(),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularTransform { x } => Failure::Singular(x),
            Error::Parse(_)
            | Error::DegenerateEnergy(_)
            | Error::InvalidGrid(_)
            | Error::InvalidPotential(_)
            | Error::Domain(_)
            | Error::GridMismatch
            | Error::Bracket { .. } => Failure::Config(e.to_string()),
            other => Failure::Numerical(other),
        }
    }
}

#[derive(Serialize)]
struct Report<A: Serialize> {
    config: ConfigEcho,
    arrays: A,
    diagnostics: Diagnostics,
    version: &'static str,
}

#[derive(Serialize, Default)]
struct Diagnostics {
    #[serde(skip_serializing_if = "Option::is_none")]
    min_abs_w_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_abs_v_tilde_minus_v: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transform: Option<TransformDiagnostics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<SeedDiagnostics>,
    residuals: Vec<ResidualReport>,
    spectrum: Spectra,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_pass: Option<bool>,
}

#[derive(Serialize, Default)]
struct Spectra {
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<SpectrumResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v_tilde: Option<SpectrumResult>,
}

#[derive(Serialize)]
struct Empty {}

#[derive(Serialize)]
struct TransformArrays {
    x: Vec<f64>,
    #[serde(rename = "V")]
    v: Vec<f64>,
    w: Vec<f64>,
    eta: Vec<f64>,
    v_tilde: Vec<f64>,
    re_v1: Vec<f64>,
    im_v1: Vec<f64>,
    re_alpha1: Vec<f64>,
    im_alpha1: Vec<f64>,
    re_alpha2: Vec<f64>,
    im_alpha2: Vec<f64>,
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(Failure::Config(format!("cannot write to standard output: {e}")))
                }
                _ => Ok(()),
            }
        }
    }
}

fn to_json<T: Serialize>(report: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(report).map_err(|e| Failure::Config(format!("serialization: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn build(cfg: &RunConfig, energy: ComplexEnergy, grid: &Grid) -> Result<(RealFunctionSamples, TransformResult), Failure> {
    let v = cfg.model.sample(grid)?;
    let seed = closed_form_seed(&cfg.model, energy, cfg.side, grid)?;
    let tr = transform(&v, &seed)?;
    Ok((v, tr))
}

pub fn run_transform(cfg: &RunConfig) -> Result<i32, Failure> {
    let energy = cfg.require_energy()?;
    let v = cfg.model.sample(&cfg.grid)?;
    let seed = closed_form_seed(&cfg.model, energy, cfg.side, &cfg.grid)?;
    let tr = transform(&v, &seed)?;
    let residuals = standard_reports(&v, &seed, &tr)?;
    let max_gap = v.values.iter().zip(&tr.v_tilde.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);

    let arrays = TransformArrays {
        x: cfg.grid.points(),
        v: v.values.clone(),
        w: tr.w.values.clone(),
        eta: tr.eta.values.clone(),
        v_tilde: tr.v_tilde.values.clone(),
        re_v1: tr.v1.re(),
        im_v1: tr.v1.im(),
        re_alpha1: tr.alpha1.re(),
        im_alpha1: tr.alpha1.im(),
        re_alpha2: tr.alpha2.re(),
        im_alpha2: tr.alpha2.im(),
    };
    let report = Report {
        config: cfg.echo("transform", false),
        arrays,
        diagnostics: Diagnostics {
            min_abs_w_ratio: Some(tr.diagnostics.min_abs_ratio),
            max_abs_v_tilde_minus_v: Some(max_gap),
            transform: Some(tr.diagnostics),
            seed: Some(seed.diagnostics()),
            residuals,
            ..Default::default()
        },
        version: env!("CARGO_PKG_VERSION"),
    };
    emit(cfg.out.as_deref(), &to_json(&report)?)?;
    Ok(EXIT_OK)
}

struct Window {
    levels: usize,
    e_min: Option<f64>,
    e_max: f64,
}

fn spectral_window(cfg: &RunConfig, a: &SpectrumArgs) -> Result<Window, Failure> {
    let levels = a.levels.unwrap_or(match cfg.model {
        PotentialModel::Oscillator => 6,
        PotentialModel::PoschlTeller { .. } => 1,
        _ => 0,
    });
    let e_max = match (a.e_max, &cfg.model) {
        (Some(e), _) => e,
        (None, PotentialModel::Oscillator) => 2.0 * levels as f64,
        (None, PotentialModel::PoschlTeller { .. }) => 0.0,
        (None, PotentialModel::Free) => 0.0,
        (None, PotentialModel::Tabulated(_)) if levels == 0 => 0.0,
        (None, PotentialModel::Tabulated(_)) => {
            return Err(Failure::Config("tabulated spectra need --e-max".into()));
        }
    };
    Ok(Window { levels, e_min: a.e_min, e_max })
}

fn lower_bound(w: &Window, potentials: &[&RealFunctionSamples]) -> f64 {
    w.e_min.unwrap_or_else(|| potentials.iter().map(|p| p.min()).fold(f64::INFINITY, f64::min) - 1.0)
}

pub fn run_verify(a: &SpectrumArgs) -> Result<i32, Failure> {
    let cfg = RunConfig::from_args(&a.run)?;
    let energy = cfg.require_energy()?;
    let window = spectral_window(&cfg, a)?;
    let mut residuals = certify(&cfg.model, energy, cfg.side, &cfg.grid, &cfg.superpotential_grid)?;

    let mut spectra = Spectra::default();
    if window.levels > 0 {
        let (v, tr) = build(&cfg, energy, &cfg.grid)?;
        let lo = lower_bound(&window, &[&v, &tr.v_tilde]);
        let base = numerov_spectrum(&v, window.levels, (lo, window.e_max))?;
        match numerov_spectrum(&tr.v_tilde, window.levels, (lo, window.e_max)) {
            Ok(partner) => {
                let gap = base
                    .energies()
                    .iter()
                    .zip(partner.energies())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                residuals.push(ResidualReport::new("isospectral", gap, ISOSPECTRAL_TOL));
                spectra.v_tilde = Some(partner);
            }
            Err(Error::Bracket { found, wanted }) => {
                let missing = wanted.abs_diff(found) as f64;
                residuals.push(ResidualReport::new("isospectral_level_count", missing, 0.0));
            }
            Err(e) => return Err(e.into()),
        }
        spectra.v = Some(base);
    }

    let all_pass = residuals.iter().all(|r| r.pass);
    let report = Report {
        config: cfg.echo("verify", true),
        arrays: Empty {},
        diagnostics: Diagnostics { residuals, spectrum: spectra, all_pass: Some(all_pass), ..Default::default() },
        version: env!("CARGO_PKG_VERSION"),
    };
    emit(cfg.out.as_deref(), &to_json(&report)?)?;
    if all_pass {
        Ok(EXIT_OK)
    } else {
        Err(Failure::Unverified)
    }
}

pub fn run_spectrum(a: &SpectrumArgs) -> Result<i32, Failure> {
    let cfg = RunConfig::from_args(&a.run)?;
    let window = spectral_window(&cfg, a)?;
    if window.levels == 0 {
        return Err(Failure::Config("no levels requested (--levels)".into()));
    }
    let v = cfg.model.sample(&cfg.grid)?;
    let mut spectra = Spectra::default();
    match cfg.energy {
        Some(energy) => {
            let (_, tr) = build(&cfg, energy, &cfg.grid)?;
            let lo = lower_bound(&window, &[&v, &tr.v_tilde]);
            spectra.v = Some(numerov_spectrum(&v, window.levels, (lo, window.e_max))?);
            spectra.v_tilde = Some(numerov_spectrum(&tr.v_tilde, window.levels, (lo, window.e_max))?);
        }
        None => {
            let lo = lower_bound(&window, &[&v]);
            spectra.v = Some(numerov_spectrum(&v, window.levels, (lo, window.e_max))?);
        }
    }
    let report = Report {
        config: cfg.echo("spectrum", false),
        arrays: Empty {},
        diagnostics: Diagnostics { spectrum: spectra, ..Default::default() },
        version: env!("CARGO_PKG_VERSION"),
    };
    emit(cfg.out.as_deref(), &to_json(&report)?)?;
    Ok(EXIT_OK)
}

pub fn run_figure(a: &FigureArgs) -> Result<i32, Failure> {
    let energy = ComplexEnergy::new(a.eps_re, a.eps_im)?;
    let grid = Grid::new(a.x_min, a.x_max, a.n)?;
    let side = a.side.into();
    let mut csv = String::new();
    match a.which {
        Which::Fig1 => {
            let f = potential_figure(energy, side, &grid)?;
            csv.push_str("x,V,v_tilde\n");
            for i in 0..f.x.len() {
                csv.push_str(&format!("{:.16e},{:.16e},{:.16e}\n", f.x[i], f.v[i], f.v_tilde[i]));
            }
        }
        Which::Fig2 => {
            let f = density_figure(energy, side, &grid)?;
            csv.push_str("x,abs_psi01_sq\n");
            for (x, d) in f.x.iter().zip(&f.density) {
                csv.push_str(&format!("{x:.16e},{d:.16e}\n"));
            }
        }
    }
    emit(a.out.as_deref(), &csv)?;
    Ok(EXIT_OK)
}
