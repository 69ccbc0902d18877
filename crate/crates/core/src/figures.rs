//! Data behind the two oscillator figures: the partner potential and the
//! ground-state density of the complex intermediate potential.

use crate::error::Result;
use crate::grid::{trapezoid, Grid};
use crate::seeds::{oscillator_seed, ComplexEnergy, DecaySide, PotentialModel};
use crate::transform::{oscillator_ground_state, partner_state_with_derivative, transform};

pub const FIGURE_EPS: (f64, f64) = (10.0, 0.1);
pub const FIGURE_SIDE: DecaySide = DecaySide::Right;

pub fn figure_grid() -> Grid {
    Grid::new(-6.0, 6.0, 1201).expect("static grid")
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialFigure {
    pub x: Vec<f64>,
    pub v: Vec<f64>,
    pub v_tilde: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityFigure {
    pub x: Vec<f64>,
    pub density: Vec<f64>,
}

impl DensityFigure {
    pub fn norm(&self) -> f64 {
        trapezoid(&self.density, self.x[1] - self.x[0])
    }

    /// Strict interior local maxima above `floor`·max.
    pub fn peak_count(&self, floor: f64) -> usize {
        let max = self.density.iter().fold(0.0f64, |m, v| m.max(*v));
        self.density
            .windows(3)
            .filter(|w| w[1] > w[0] && w[1] >= w[2] && w[1] > floor * max)
            .count()
    }
}

/// x, V = x², Ṽ for the oscillator transformed with `energy` and `side`.
pub fn potential_figure(energy: ComplexEnergy, side: DecaySide, grid: &Grid) -> Result<PotentialFigure> {
    let v = PotentialModel::Oscillator.sample(grid)?;
    let seed = oscillator_seed(energy, side, grid)?;
    let tr = transform(&v, &seed)?;
    Ok(PotentialFigure { x: grid.points(), v: v.values, v_tilde: tr.v_tilde.values })
}

/// |ψ¹₀|² with ψ⁰ = π^(−1/4) e^(−x²/2) and unit trapezoidal norm.
pub fn density_figure(energy: ComplexEnergy, side: DecaySide, grid: &Grid) -> Result<DensityFigure> {
    let seed = oscillator_seed(energy, side, grid)?;
    let (psi0, dpsi0) = oscillator_ground_state(grid)?;
    let state = partner_state_with_derivative(&psi0, &dpsi0, &seed)?;
    Ok(DensityFigure { x: grid.points(), density: state.psi.abs_sq() })
}

pub fn fig1() -> Result<PotentialFigure> {
    potential_figure(ComplexEnergy::new(FIGURE_EPS.0, FIGURE_EPS.1)?, FIGURE_SIDE, &figure_grid())
}

pub fn fig2() -> Result<DensityFigure> {
    density_figure(ComplexEnergy::new(FIGURE_EPS.0, FIGURE_EPS.1)?, FIGURE_SIDE, &figure_grid())
}
