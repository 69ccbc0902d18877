use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),

    #[error("series did not converge: {0}")]
    Convergence(String),

    #[error("argument outside supported domain: {0}")]
    Domain(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("degenerate energy: Im(eps1) must be nonzero (got {0})")]
    DegenerateEnergy(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid mismatch between operands")]
    GridMismatch,

    #[error("invalid potential: {0}")]
    InvalidPotential(String),

    #[error("seed has a node near x = {x}")]
    SeedNode { x: f64 },

    #[error("seed integration blew up near x = {x}")]
    BlowUp { x: f64 },

    #[error("seed Schrodinger residual {residual:e} exceeds tolerance {tolerance:e}")]
    SeedResidual { residual: f64, tolerance: f64 },

    #[error("singular transformation: w changes sign near x = {x}")]
    SingularTransform { x: f64 },

    #[error("Backlund denominator Im(beta1) vanishes near x = {x}")]
    DegenerateDenominator { x: f64 },

    #[error("transformed state vanishes identically")]
    ZeroState,

    #[error("bracket contains {found} levels, {wanted} requested")]
    Bracket { found: usize, wanted: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
