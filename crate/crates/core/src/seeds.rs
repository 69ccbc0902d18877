//! Base potentials and seed solutions u₁ of −u″ + V u = ε₁ u that decay at one
//! end of the domain.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, RealFunctionSamples};
use crate::specfun::{gamma, kummer_1f1, tricomi_psi};
use crate::stencil::{interior_max, second_derivative, EDGE};

/// Relative Schrödinger-residual factor for closed-form seeds.
pub const DEFAULT_SEED_TOL: f64 = 1e-6;

/// Environment variable overriding [`DEFAULT_SEED_TOL`].
pub const SEED_TOL_ENV: &str = "SUSY2_SEED_TOL";

/// Oscillator seeds switch to the Tricomi form on the decaying half-line
/// once x² reaches this value.
pub const OSCILLATOR_TAIL_Z: f64 = 20.0;

const BLOW_UP: f64 = 1e150;
const NODE_RATIO: f64 = 1e-12;

pub fn seed_tolerance_factor() -> f64 {
    std::env::var(SEED_TOL_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|t| t.is_finite() && *t > 0.0)
        .unwrap_or(DEFAULT_SEED_TOL)
}

/// The factorization energy ε₁, kept on the branch Im ε₁ > 0. Its partner is
/// ε₂ = ε̄₁.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexEnergy {
    eps1: Complex64,
}

impl ComplexEnergy {
    /// Builds ε₁ from its real and imaginary part. A negative imaginary part
    /// is conjugated onto the canonical branch; zero is rejected.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::Domain(format!("energy {re} + {im}i")));
        }
        if im == 0.0 {
            return Err(Error::DegenerateEnergy(im));
        }
        Ok(ComplexEnergy { eps1: Complex64::new(re, im.abs()) })
    }

    pub fn from_complex(eps: Complex64) -> Result<Self> {
        Self::new(eps.re, eps.im)
    }

    pub fn eps1(&self) -> Complex64 {
        self.eps1
    }

    pub fn eps2(&self) -> Complex64 {
        self.eps1.conj()
    }

    /// d = Re ε₁.
    pub fn d(&self) -> f64 {
        self.eps1.re
    }

    /// c = −(Im ε₁)² < 0.
    pub fn c(&self) -> f64 {
        -self.eps1.im * self.eps1.im
    }

    /// ξ = i·Im ε₁, the root of ξ² = c on this branch.
    pub fn xi(&self) -> Complex64 {
        Complex64::new(0.0, self.eps1.im)
    }

    /// κ = √(−ε₁) with Re κ > 0, so that −(κ)² = ε₁. For free-particle type
    /// seeds κ = k₁ + i k₂.
    pub fn kappa(&self) -> Complex64 {
        (-self.eps1).sqrt()
    }
}

/// ε₁ = −(k₁ + i k₂)², moved to the Im ε₁ > 0 branch.
pub fn energy_from_k(k1: f64, k2: f64) -> Result<ComplexEnergy> {
    if !(k1 > 0.0) || !k1.is_finite() {
        return Err(Error::Domain(format!("k1 = {k1} must be positive")));
    }
    if k2 == 0.0 {
        return Err(Error::DegenerateEnergy(0.0));
    }
    let k = Complex64::new(k1, k2);
    ComplexEnergy::from_complex(-(k * k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecaySide {
    /// u₁ → 0 as x → −∞ (upper signs; ν = +1 for the oscillator).
    Left,
    /// u₁ → 0 as x → +∞ (lower signs; ν = −1 for the oscillator).
    Right,
}

impl DecaySide {
    pub fn from_nu_sign(nu: i32) -> Result<Self> {
        match nu {
            1 => Ok(DecaySide::Left),
            -1 => Ok(DecaySide::Right),
            other => Err(Error::Domain(format!("nu must be +1 or -1, got {other}"))),
        }
    }

    pub fn nu_sign(self) -> f64 {
        match self {
            DecaySide::Left => 1.0,
            DecaySide::Right => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            DecaySide::Left => DecaySide::Right,
            DecaySide::Right => DecaySide::Left,
        }
    }
}

/// The initial potential V(x).
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialModel {
    Free,
    /// V = −2k₀² sech²(k₀x).
    PoschlTeller { k0: f64 },
    /// V = x².
    Oscillator,
    Tabulated(RealFunctionSamples),
}

impl PotentialModel {
    pub fn poschl_teller(k0: f64) -> Result<Self> {
        if !(k0 > 0.0) || !k0.is_finite() {
            return Err(Error::InvalidPotential(format!("k0 = {k0} must be positive")));
        }
        Ok(PotentialModel::PoschlTeller { k0 })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PotentialModel::Free => "free",
            PotentialModel::PoschlTeller { .. } => "pt",
            PotentialModel::Oscillator => "oscillator",
            PotentialModel::Tabulated(_) => "tabulated",
        }
    }

    /// Closed-form value, `None` for tabulated data.
    pub fn value(&self, x: f64) -> Option<f64> {
        match *self {
            PotentialModel::Free => Some(0.0),
            PotentialModel::PoschlTeller { k0 } => {
                let s = 1.0 / (k0 * x).cosh();
                Some(-2.0 * k0 * k0 * s * s)
            }
            PotentialModel::Oscillator => Some(x * x),
            PotentialModel::Tabulated(_) => None,
        }
    }

    pub fn sample(&self, grid: &Grid) -> Result<RealFunctionSamples> {
        match self {
            PotentialModel::Tabulated(t) => {
                t.grid.ensure_same(grid)?;
                Ok(t.clone())
            }
            m => RealFunctionSamples::from_fn(*grid, |x| m.value(x).unwrap_or(0.0)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct SeedDiagnostics {
    /// |V(x_end) − V(x_end ∓ 10h)| at the decay end (numeric seeds only).
    pub end_variation: Option<f64>,
    /// Set when 2·Re κ·(x_max − x_min) < 1: w barely varies and the
    /// transformation is poorly conditioned.
    pub weak_decay: bool,
}

/// Samples of u₁ and u₁′ on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedFunction {
    grid: Grid,
    u: Vec<Complex64>,
    du: Vec<Complex64>,
    decay_side: DecaySide,
    energy: ComplexEnergy,
    diagnostics: SeedDiagnostics,
}

impl SeedFunction {
    pub fn new(
        grid: Grid,
        u: Vec<Complex64>,
        du: Vec<Complex64>,
        decay_side: DecaySide,
        energy: ComplexEnergy,
    ) -> Result<Self> {
        if u.len() != grid.len() || du.len() != grid.len() {
            return Err(Error::GridMismatch);
        }
        for (i, (a, b)) in u.iter().zip(&du).enumerate() {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::NonFinite(format!("seed at x = {}", grid.x(i))));
            }
            if a.norm() == 0.0 {
                return Err(Error::SeedNode { x: grid.x(i) });
            }
        }
        Ok(SeedFunction { grid, u, du, decay_side, energy, diagnostics: SeedDiagnostics::default() })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn u(&self) -> &[Complex64] {
        &self.u
    }

    pub fn du(&self) -> &[Complex64] {
        &self.du
    }

    pub fn decay_side(&self) -> DecaySide {
        self.decay_side
    }

    pub fn energy(&self) -> ComplexEnergy {
        self.energy
    }

    pub fn diagnostics(&self) -> SeedDiagnostics {
        self.diagnostics
    }

    pub fn max_abs_u(&self) -> f64 {
        self.u.iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// Interior max of |−u″ + (V − ε₁)u| with u″ from the 4th-order stencil.
    pub fn schrodinger_residual(&self, v: &RealFunctionSamples) -> Result<f64> {
        self.grid.ensure_same(&v.grid)?;
        let d2 = second_derivative(&self.u, self.grid.h());
        let eps = self.energy.eps1();
        let n = self.u.len();
        let res = (0..n).map(|i| (-d2[i] + (v.values[i] - eps) * self.u[i]).norm());
        Ok(interior_max(res, n, EDGE))
    }

    /// tol_schr = factor · max|u| · (1 + |ε₁|).
    pub fn schrodinger_tolerance(&self) -> f64 {
        seed_tolerance_factor() * self.max_abs_u() * (1.0 + self.energy.eps1().norm())
    }

    fn checked_against(self, model: &PotentialModel) -> Result<Self> {
        let v = model.sample(&self.grid)?;
        let residual = self.schrodinger_residual(&v)?;
        let tolerance = self.schrodinger_tolerance();
        if residual > tolerance {
            return Err(Error::SeedResidual { residual, tolerance });
        }
        Ok(self)
    }

    fn with_weak_decay(mut self, k1: f64) -> Self {
        self.diagnostics.weak_decay = 2.0 * k1 * (self.grid.x_max() - self.grid.x_min()) < 1.0;
        self
    }
}

fn side_sign(side: DecaySide) -> f64 {
    side.nu_sign()
}

pub(crate) fn free_samples(kappa: Complex64, side: DecaySide, grid: &Grid) -> (Vec<Complex64>, Vec<Complex64>) {
    let k = kappa * side_sign(side);
    let u: Vec<Complex64> = grid.points().iter().map(|&x| (k * x).exp()).collect();
    let du = u.iter().map(|&v| k * v).collect();
    (u, du)
}

/// u₁ = e^{+κx} (Left) or e^{−κx} (Right) for V = 0.
pub fn free_seed(energy: ComplexEnergy, side: DecaySide, grid: &Grid) -> Result<SeedFunction> {
    let kappa = energy.kappa();
    let (u, du) = free_samples(kappa, side, grid);
    Ok(SeedFunction::new(*grid, u, du, side, energy)?
        .with_weak_decay(kappa.re)
        .checked_against(&PotentialModel::Free)?)
}

pub(crate) fn poschl_teller_samples(
    k0: f64,
    kappa: Complex64,
    side: DecaySide,
    grid: &Grid,
) -> (Vec<Complex64>, Vec<Complex64>) {
    // Left: e^{κx}[k₀ tanh(k₀x) − κ];  Right: e^{−κx}[k₀ tanh(k₀x) + κ]
    let s = side_sign(side);
    let k = kappa * s;
    let mut u = Vec::with_capacity(grid.len());
    let mut du = Vec::with_capacity(grid.len());
    for x in grid.points() {
        let t = (k0 * x).tanh();
        let sech2 = 1.0 - t * t;
        let e = (k * x).exp();
        let bracket = k0 * t - k;
        u.push(e * bracket);
        du.push(e * (k * bracket + k0 * k0 * sech2));
    }
    (u, du)
}

/// 1-SUSY transformed free solutions for V = −2k₀² sech²(k₀x).
pub fn poschl_teller_seed(k0: f64, energy: ComplexEnergy, side: DecaySide, grid: &Grid) -> Result<SeedFunction> {
    let model = PotentialModel::poschl_teller(k0)?;
    let kappa = energy.kappa();
    let (u, du) = poschl_teller_samples(k0, kappa, side, grid);
    Ok(SeedFunction::new(*grid, u, du, side, energy)?
        .with_weak_decay(kappa.re)
        .checked_against(&model)?)
}

pub(crate) fn oscillator_samples(
    eps: Complex64,
    side: DecaySide,
    grid: &Grid,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if grid.x_min() < -10.0 || grid.x_max() > 10.0 {
        return Err(Error::Domain("oscillator seeds need |x| <= 10".into()));
    }
    let one = Complex64::new(1.0, 0.0);
    let a = (one - eps) / 4.0;
    let b = (3.0 - eps) / 4.0;
    let half = Complex64::new(0.5, 0.0);
    let three_half = Complex64::new(1.5, 0.0);
    let five_half = Complex64::new(2.5, 0.0);
    let ratio = gamma(b)? / gamma(a)?;
    let tail_scale = gamma(b)? / PI.sqrt();
    let nu = side.nu_sign();

    let mut u = Vec::with_capacity(grid.len());
    let mut du = Vec::with_capacity(grid.len());
    for x in grid.points() {
        let z = x * x;
        let gauss = (-0.5 * z).exp();
        let on_tail = z >= OSCILLATOR_TAIL_Z && x * nu < 0.0;
        if on_tail {
            // decaying half-line: u = Γ(b)/Γ(1/2) e^{−x²/2} Ψ(a, 1/2; x²)
            let psi = tricomi_psi(a, half, z)?;
            let dpsi = -a * tricomi_psi(a + 1.0, three_half, z)?;
            u.push(tail_scale * gauss * psi);
            du.push(tail_scale * gauss * (-x * psi + 2.0 * x * dpsi));
        } else {
            let f1 = kummer_1f1(a, half, z)?;
            let f2 = kummer_1f1(b, three_half, z)?;
            let df1 = kummer_1f1(a + 1.0, three_half, z)?;
            let df2 = kummer_1f1(b + 1.0, five_half, z)?;
            let val = gauss * (f1 + 2.0 * nu * x * ratio * f2);
            // d/dx 1F1(a,1/2;x²) = 4ax 1F1(a+1,3/2;x²)
            // d/dx [x 1F1(b,3/2;x²)] = 1F1(b,3/2;x²) + (4b/3)x² 1F1(b+1,5/2;x²)
            let inner = 4.0 * a * x * df1 + 2.0 * nu * ratio * (f2 + (4.0 / 3.0) * b * z * df2);
            u.push(val);
            du.push(-x * val + gauss * inner);
        }
    }
    Ok((u, du))
}

/// Oscillator seed
/// `u₁ = e^{−x²/2}[₁F₁((1−ε₁)/4, 1/2; x²) + 2νx Γ((3−ε₁)/4)/Γ((1−ε₁)/4) ₁F₁((3−ε₁)/4, 3/2; x²)]`
/// with ν = +1 for `Left` and ν = −1 for `Right`.
pub fn oscillator_seed(energy: ComplexEnergy, side: DecaySide, grid: &Grid) -> Result<SeedFunction> {
    let (u, du) = oscillator_samples(energy.eps1(), side, grid)?;
    SeedFunction::new(*grid, u, du, side, energy)?.checked_against(&PotentialModel::Oscillator)
}

/// Seed for the closed-form models; tabulated potentials go through
/// [`numeric_seed`].
pub fn closed_form_seed(
    model: &PotentialModel,
    energy: ComplexEnergy,
    side: DecaySide,
    grid: &Grid,
) -> Result<SeedFunction> {
    match *model {
        PotentialModel::Free => free_seed(energy, side, grid),
        PotentialModel::PoschlTeller { k0 } => poschl_teller_seed(k0, energy, side, grid),
        PotentialModel::Oscillator => oscillator_seed(energy, side, grid),
        PotentialModel::Tabulated(_) => numeric_seed(model, energy, side, grid),
    }
}

/// Cubic interpolation of V halfway between samples `i` and `i + 1`.
fn midpoint_value(v: &[f64], i: usize) -> f64 {
    let n = v.len();
    if i == 0 {
        0.3125 * v[0] + 0.9375 * v[1] - 0.3125 * v[2] + 0.0625 * v[3]
    } else if i + 2 >= n {
        0.3125 * v[n - 1] + 0.9375 * v[n - 2] - 0.3125 * v[n - 3] + 0.0625 * v[n - 4]
    } else {
        (9.0 * (v[i] + v[i + 1]) - (v[i - 1] + v[i + 2])) / 16.0
    }
}

/// Integrates −u″ + (V − ε₁)u = 0 inward from the decay end with classical
/// RK4, starting from the decaying WKB asymptote, and rescales to max|u| = 1.
pub fn numeric_seed(
    potential: &PotentialModel,
    energy: ComplexEnergy,
    side: DecaySide,
    grid: &Grid,
) -> Result<SeedFunction> {
    let v = potential.sample(grid)?;
    let vals = &v.values;
    let n = grid.len();
    let h = grid.h();
    let eps = energy.eps1();

    let (start, step): (usize, f64) = match side {
        DecaySide::Left => (0, h),
        DecaySide::Right => (n - 1, -h),
    };
    let q = Complex64::new(vals[start], 0.0) - eps;
    let q = q.sqrt();
    let q = if q.re < 0.0 { -q } else { q };

    let mut u = vec![Complex64::new(0.0, 0.0); n];
    let mut du = vec![Complex64::new(0.0, 0.0); n];
    u[start] = Complex64::new(1.0, 0.0);
    du[start] = q * side.nu_sign();

    let rhs = |vx: f64, y: Complex64| (vx - eps) * y;
    for k in 0..n - 1 {
        let (i, j) = match side {
            DecaySide::Left => (k, k + 1),
            DecaySide::Right => (n - 1 - k, n - 2 - k),
        };
        let vm = midpoint_value(vals, i.min(j));
        let (y, p) = (u[i], du[i]);
        let k1y = p;
        let k1p = rhs(vals[i], y);
        let k2y = p + k1p * (0.5 * step);
        let k2p = rhs(vm, y + k1y * (0.5 * step));
        let k3y = p + k2p * (0.5 * step);
        let k3p = rhs(vm, y + k2y * (0.5 * step));
        let k4y = p + k3p * step;
        let k4p = rhs(vals[j], y + k3y * step);
        u[j] = y + (k1y + 2.0 * k2y + 2.0 * k3y + k4y) * (step / 6.0);
        du[j] = p + (k1p + 2.0 * k2p + 2.0 * k3p + k4p) * (step / 6.0);
        if !(u[j].norm() <= BLOW_UP) {
            return Err(Error::BlowUp { x: grid.x(j) });
        }
    }

    let max = u.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    for (a, b) in u.iter_mut().zip(du.iter_mut()) {
        *a /= max;
        *b /= max;
    }
    let mags: Vec<f64> = u.iter().map(|z| z.norm()).collect();
    for i in 1..n - 1 {
        if mags[i] < NODE_RATIO && mags[i] <= mags[i - 1] && mags[i] <= mags[i + 1] {
            return Err(Error::SeedNode { x: grid.x(i) });
        }
    }

    let far = match side {
        DecaySide::Left => 10.min(n - 1),
        DecaySide::Right => n - 1 - 10.min(n - 1),
    };
    let mut seed = SeedFunction::new(*grid, u, du, side, energy)?.with_weak_decay(q.re);
    seed.diagnostics.end_variation = Some((vals[start] - vals[far]).abs());
    Ok(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid {
        Grid::new(-10.0, 10.0, 2001).unwrap()
    }

    #[test]
    fn energy_branch_rule() {
        let e = energy_from_k(1.0, 1.0).unwrap();
        assert!((e.eps1() - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        let e = energy_from_k(0.5, 0.3).unwrap();
        assert!((e.eps1() - Complex64::new(-0.16, 0.3)).norm() < 1e-15);
        assert_eq!(energy_from_k(1.0, 0.0), Err(Error::DegenerateEnergy(0.0)));
        assert!(energy_from_k(-1.0, 0.5).is_err());
    }

    #[test]
    fn energy_constants() {
        let e = ComplexEnergy::new(10.0, -0.1).unwrap();
        assert_eq!(e.eps1(), Complex64::new(10.0, 0.1));
        assert_eq!(e.d(), 10.0);
        assert!((e.c() + 0.01).abs() < 1e-16);
        assert!((e.xi() * e.xi() - e.c()).norm() < 1e-16);
        let k = e.kappa();
        assert!(k.re > 0.0);
        assert!((-(k * k) - e.eps1()).norm() < 1e-14);
        assert!(matches!(ComplexEnergy::new(1.0, 0.0), Err(Error::DegenerateEnergy(_))));
    }

    #[test]
    fn free_seed_at_origin() {
        let e = energy_from_k(0.5, 0.3).unwrap();
        let s = free_seed(e, DecaySide::Left, &grid()).unwrap();
        let i0 = 1000;
        assert!((s.u()[i0] - 1.0).norm() < 1e-12);
        assert!((s.du()[i0] - e.kappa()).norm() < 1e-12);
        // |u| = e^{k1 x} strictly increasing
        assert!(s.u().windows(2).all(|w| w[1].norm() > w[0].norm()));
    }

    #[test]
    fn pt_seed_at_origin_and_decay() {
        let e = energy_from_k(0.5, 0.3).unwrap();
        let left = poschl_teller_seed(1.0, e, DecaySide::Left, &grid()).unwrap();
        assert!((left.u()[1000] + e.kappa()).norm() < 1e-12);
        // du(0) = κ·(−κ) + k0²
        assert!((left.du()[1000] - (1.0 - e.kappa() * e.kappa())).norm() < 1e-12);

        let right = poschl_teller_seed(1.0, e, DecaySide::Right, &grid()).unwrap();
        assert!(right.u()[2000].norm() < (-4.0f64).exp());
        let min = right.u().iter().fold(f64::INFINITY, |m, z| m.min(z.norm()));
        assert!(min > 0.0);
    }

    #[test]
    fn oscillator_seed_basics() {
        let e = ComplexEnergy::new(10.0, 0.1).unwrap();
        let g = Grid::new(-6.0, 6.0, 1201).unwrap();
        let s = oscillator_seed(e, DecaySide::Right, &g).unwrap();
        assert!((s.u()[600] - 1.0).norm() < 1e-14);
        let ratio = s.u()[g.nearest_index(6.0)].norm() / s.u()[600].norm();
        assert!(ratio < 1e-3, "{ratio}");
    }

    #[test]
    fn oscillator_tail_matches_kummer_form() {
        // the Tricomi tail and the Kummer form are the same function
        let eps = Complex64::new(10.0, 0.1);
        let x0 = OSCILLATOR_TAIL_Z.sqrt();
        let g = Grid::new(x0, x0 + 0.15, 16).unwrap();
        let (u, _) = oscillator_samples(eps, DecaySide::Right, &g).unwrap();
        let a = (1.0 - eps) / 4.0;
        let b = (3.0 - eps) / 4.0;
        let r = gamma(b).unwrap() / gamma(a).unwrap();
        for (i, x) in g.points().into_iter().enumerate() {
            let z = x * x;
            let k = (-0.5 * z).exp()
                * (kummer_1f1(a, Complex64::new(0.5, 0.0), z).unwrap()
                    - 2.0 * x * r * kummer_1f1(b, Complex64::new(1.5, 0.0), z).unwrap());
            assert!((u[i] - k).norm() / k.norm() < 1e-10, "{} vs {}", u[i], k);
        }
    }

    #[test]
    fn conjugate_energy_conjugates_seed() {
        let g = Grid::new(-6.0, 6.0, 601).unwrap();
        let eps = Complex64::new(10.0, 0.1);
        let (u, du) = oscillator_samples(eps, DecaySide::Right, &g).unwrap();
        let (uc, duc) = oscillator_samples(eps.conj(), DecaySide::Right, &g).unwrap();
        for i in 0..g.len() {
            assert!((uc[i] - u[i].conj()).norm() <= 1e-12 * u[i].norm().max(1e-300));
            assert!((duc[i] - du[i].conj()).norm() <= 1e-12 * du[i].norm().max(1e-300));
        }
        let k = Complex64::new(0.5, 0.3);
        let (p, _) = poschl_teller_samples(1.0, k, DecaySide::Left, &grid());
        let (pc, _) = poschl_teller_samples(1.0, k.conj(), DecaySide::Left, &grid());
        assert!(p.iter().zip(&pc).all(|(a, b)| (a.conj() - b).norm() <= 1e-14 * a.norm()));
    }

    #[test]
    fn nu_sign_mapping() {
        assert_eq!(DecaySide::from_nu_sign(1).unwrap(), DecaySide::Left);
        assert_eq!(DecaySide::from_nu_sign(-1).unwrap(), DecaySide::Right);
        assert!(DecaySide::from_nu_sign(0).is_err());
    }

    #[test]
    fn seed_rejects_zero_sample() {
        let g = Grid::new(0.0, 1.0, 16).unwrap();
        let e = energy_from_k(1.0, 1.0).unwrap();
        let mut u = vec![Complex64::new(1.0, 0.0); 16];
        u[4] = Complex64::new(0.0, 0.0);
        let du = vec![Complex64::new(0.0, 0.0); 16];
        assert!(matches!(SeedFunction::new(g, u, du, DecaySide::Left, e), Err(Error::SeedNode { .. })));
    }

    #[test]
    fn weak_decay_flag() {
        let g = Grid::new(-1.0, 1.0, 201).unwrap();
        let e = energy_from_k(0.1, 1.0).unwrap();
        assert!(free_seed(e, DecaySide::Left, &g).unwrap().diagnostics().weak_decay);
        let e = energy_from_k(1.0, 1.0).unwrap();
        assert!(!free_seed(e, DecaySide::Left, &g).unwrap().diagnostics().weak_decay);
    }

    #[test]
    fn numeric_seed_requires_matching_grid() {
        let g = grid();
        let other = Grid::new(-5.0, 5.0, 101).unwrap();
        let tab = PotentialModel::Tabulated(RealFunctionSamples::new(other, vec![0.0; 101]).unwrap());
        let e = energy_from_k(1.0, 1.0).unwrap();
        assert_eq!(numeric_seed(&tab, e, DecaySide::Left, &g), Err(Error::GridMismatch));
    }
}
