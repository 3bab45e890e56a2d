//! Numerical laboratory for observability inequalities of backward
//! stochastic evolution equations.
//!
//! The library builds, mode by mode, everything needed to estimate and
//! verify an observability inequality of the form
//!
//! ```text
//! ‖z(0)‖_{L²_F₀(Ω;H)} ≤ C · ‖χ_E B* z‖_{L¹_F(0,T;L²(Ω;U))}
//! ```
//!
//! for the backward stochastic equation dz = λz dt + F(t)Z dt + Z dW
//! in the eigenbasis of a 1-D elliptic operator (heat, fourth order, or
//! degenerate x^α), with observation restricted to a measurable space
//! set G and a measurable time set E. The pieces are:
//!
//! - [`spectra`]: eigenvalues and orthonormal eigenfunctions of −A,
//!   closed form where available and a conservative finite-difference
//!   eigensolve for the degenerate family;
//! - [`specineq`]: sharp low-frequency observability constants C(λ)
//!   via Gram-matrix minimum eigenvalues and a feasible envelope
//!   C(λ) ≤ N̂·exp(N̂·λ^γ);
//! - [`bsde`]: closed-form and regression Monte Carlo solvers for the
//!   modal backward equation, with decay and interpolation checks;
//! - [`forward`]: the controlled forward equation by exact integrating
//!   factor, plus the forward/backward duality identity;
//! - [`telescope`]: the telescoping-series construction that turns an
//!   interpolation inequality at one time into an observability
//!   constant over a measurable time set;
//! - [`hum`]: HUM-style null-control synthesis and verification.
//!
//! Shared domain types (measurable sets as finite interval unions, time
//! grids, noise coefficients, reproducible Brownian ensembles) live in
//! [`set`], [`grid`], [`noise`], [`ensemble`], and [`operator`].

pub mod bsde;
pub mod ensemble;
mod error;
pub mod forward;
pub mod grid;
pub mod hum;
pub mod noise;
pub mod operator;
pub mod quad;
pub mod set;
pub mod specineq;
pub mod spectra;
pub mod telescope;

pub use error::{Error, Result};
pub use ensemble::{BrownianTable, EnsembleSpec};
pub use grid::TimeGrid;
pub use noise::NoiseModel;
pub use operator::{Degeneracy, OperatorFamily, OperatorSpec};
pub use set::FiniteUnionSet;
pub use spectra::SpectralBasis;
