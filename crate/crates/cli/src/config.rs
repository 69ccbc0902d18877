use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use susy2::seeds::energy_from_k;
use susy2::verify::{default_grid, verification_grid};
use susy2::{ComplexEnergy, DecaySide, Error, Grid, PotentialModel};

#[derive(Parser, Debug)]
#[command(name = "susy2", version, about = "Second-order SUSY partners from complex-conjugate factorization energies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build Ṽ, V₁, α₁, α₂ and write them as JSON.
    Transform(RunArgs),
    /// Run every residual check and compare the spectra of V and Ṽ.
    Verify(SpectrumArgs),
    /// Numerov spectrum of V, and of Ṽ when an energy is given.
    Spectrum(SpectrumArgs),
    /// Write CSV data for the oscillator figures.
    Figure(FigureArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PotentialKind {
    Free,
    Pt,
    Oscillator,
    Tabulated,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Fig1,
    Fig2,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialKind,
    /// Soliton parameter of V = −2k₀² sech²(k₀x).
    #[arg(long, default_value_t = 1.0)]
    pub k0: f64,
    /// ε₁ = −(k₁ + ik₂)².
    #[arg(long, requires = "k2", conflicts_with_all = ["eps_re", "eps_im"])]
    pub k1: Option<f64>,
    #[arg(long, requires = "k1", allow_negative_numbers = true)]
    pub k2: Option<f64>,
    #[arg(long, requires = "eps_im", allow_negative_numbers = true)]
    pub eps_re: Option<f64>,
    #[arg(long, requires = "eps_re", allow_negative_numbers = true)]
    pub eps_im: Option<f64>,
    /// Half-line on which u₁ decays.
    #[arg(long, value_enum, conflicts_with = "nu")]
    pub side: Option<SideArg>,
    /// Oscillator sign: +1 decays on the left, −1 on the right.
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<i32>,
    #[arg(long, allow_negative_numbers = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Two-column `x V` text or JSON {"x": [...], "V": [...]}.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long)]
    pub levels: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pub e_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub e_max: Option<f64>,
}

#[derive(Args, Debug, Clone)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub which: Which,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    pub eps_re: f64,
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    pub eps_im: f64,
    #[arg(long, value_enum, default_value = "right")]
    pub side: SideArg,
    #[arg(long, default_value_t = -6.0, allow_negative_numbers = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 1201)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failures that are the caller's fault: bad flags, files or grids.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl From<Error> for ConfigError {
    fn from(e: Error) -> Self {
        ConfigError(e.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GridEcho {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
}

impl From<&Grid> for GridEcho {
    fn from(g: &Grid) -> Self {
        GridEcho { x_min: g.x_min(), x_max: g.x_max(), n: g.len() }
    }
}

/// Echo of the resolved configuration, embedded in every report.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub command: &'static str,
    pub potential: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps_re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps_im: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<DecaySide>,
    pub grid: GridEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub superpotential_grid: Option<GridEcho>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub model: PotentialModel,
    pub energy: Option<ComplexEnergy>,
    pub side: DecaySide,
    pub grid: Grid,
    /// Grid for the checks that difference β₁.
    pub superpotential_grid: Grid,
    pub file: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(a: &RunArgs) -> Result<Self, ConfigError> {
        let model = match a.potential {
            PotentialKind::Free => PotentialModel::Free,
            PotentialKind::Pt => PotentialModel::poschl_teller(a.k0)?,
            PotentialKind::Oscillator => PotentialModel::Oscillator,
            PotentialKind::Tabulated => {
                let path = a
                    .file
                    .as_ref()
                    .ok_or_else(|| ConfigError("--potential tabulated needs --file".into()))?;
                let text = std::fs::read_to_string(path)
                    .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
                PotentialModel::Tabulated(susy2::tabulated::parse(&text)?)
            }
        };
        if a.file.is_some() && a.potential != PotentialKind::Tabulated {
            return Err(ConfigError("--file is only used with --potential tabulated".into()));
        }

        let energy = match (a.k1, a.k2, a.eps_re, a.eps_im) {
            (Some(k1), Some(k2), None, None) => Some(energy_from_k(k1, k2)?),
            (None, None, Some(re), Some(im)) => Some(ComplexEnergy::new(re, im)?),
            (None, None, None, None) => None,
            _ => return Err(ConfigError("give either --k1/--k2 or --eps-re/--eps-im".into())),
        };

        let side = match (a.side, a.nu) {
            (Some(SideArg::Left), None) => DecaySide::Left,
            (Some(SideArg::Right), None) => DecaySide::Right,
            (None, Some(nu)) => DecaySide::from_nu_sign(nu)?,
            (None, None) => DecaySide::Left,
            (Some(_), Some(_)) => return Err(ConfigError("--side and --nu are exclusive".into())),
        };

        let explicit = a.x_min.is_some() || a.x_max.is_some() || a.n.is_some();
        if explicit && matches!(model, PotentialModel::Tabulated(_)) {
            return Err(ConfigError("tabulated potentials take their grid from the file".into()));
        }
        let base = default_grid(&model);
        let grid = if explicit {
            Grid::new(
                a.x_min.unwrap_or(base.x_min()),
                a.x_max.unwrap_or(base.x_max()),
                a.n.unwrap_or(base.len()),
            )?
        } else {
            base
        };
        let superpotential_grid = if explicit { grid } else { verification_grid(&model) };

        Ok(RunConfig { model, energy, side, grid, superpotential_grid, file: a.file.clone(), out: a.out.clone() })
    }

    pub fn require_energy(&self) -> Result<ComplexEnergy, ConfigError> {
        self.energy
            .ok_or_else(|| ConfigError("an energy is required: --k1/--k2 or --eps-re/--eps-im".into()))
    }

    pub fn echo(&self, command: &'static str, with_superpotential_grid: bool) -> ConfigEcho {
        ConfigEcho {
            command,
            potential: self.model.name(),
            k0: match self.model {
                PotentialModel::PoschlTeller { k0 } => Some(k0),
                _ => None,
            },
            file: self.file.as_ref().map(|p| p.display().to_string()),
            eps_re: self.energy.map(|e| e.eps1().re),
            eps_im: self.energy.map(|e| e.eps1().im),
            side: self.energy.map(|_| self.side),
            grid: (&self.grid).into(),
            superpotential_grid: with_superpotential_grid.then(|| (&self.superpotential_grid).into()),
        }
    }
}

impl From<SideArg> for DecaySide {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Left => DecaySide::Left,
            SideArg::Right => DecaySide::Right,
        }
    }
}
