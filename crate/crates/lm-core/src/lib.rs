//! Finite element solver for the Ladyzhenskaya large-eddy-simulation model of
//! incompressible flow in two dimensions.
//!
//! The crate provides:
//!
//! - [`mesh`]: triangular meshes with boundary markers, generators for the
//!   unit square and the forward-backward facing step channel, and a plain
//!   text file format.
//! - [`fem`]: Taylor-Hood (P2/P1) reference elements, quadrature, dof maps,
//!   nodal interpolation and quadrature-driven integration.
//! - [`linalg`]: CSR sparse matrices and a direct solver for the per-step
//!   saddle-point systems.
//! - [`forms`]: assembly of the variational operators (mass, diffusion,
//!   divergence, SKEW/EMAC convection, nonlinear eddy viscosity).
//! - [`stepper`]: Crank-Nicolson time integration with Newton (and Picard
//!   fallback) nonlinear solves.
//! - [`diagnostics`]: conserved-quantity tracking, exact-solution errors and
//!   convergence rates.

pub mod diagnostics;
pub mod error;
pub mod fem;
pub mod forms;
pub mod linalg;
pub mod mesh;
pub mod stepper;

pub use error::{Error, Result};
