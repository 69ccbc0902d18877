//! Second-order supersymmetric (Darboux–Crum) transformations driven by a
//! pair of complex-conjugate factorization energies ε₁, ε̄₁.
//!
//! The pipeline is:
//!
//! 1. pick a base potential ([`PotentialModel`]) and a [`ComplexEnergy`];
//! 2. build a seed solution u₁ that decays at one end of the domain
//!    ([`seeds`]);
//! 3. form the normalized Wronskian w = W(u₁, ū₁)/(2i Im ε₁), check that it is
//!    nodeless and assemble the real partner Ṽ, the complex intermediate
//!    potential V₁ and the superpotentials ([`transform`]);
//! 4. certify the result with residual checks and a Numerov spectrum
//!    ([`verify`], [`numerov`]).

pub mod error;
pub mod figures;
pub mod grid;
pub mod numerov;
pub mod seeds;
pub mod specfun;
pub mod stencil;
pub mod tabulated;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{ComplexFunctionSamples, Grid, RealFunctionSamples};
pub use num_complex::Complex64;
pub use seeds::{ComplexEnergy, DecaySide, PotentialModel, SeedFunction};
pub use transform::TransformResult;

/// Complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;
