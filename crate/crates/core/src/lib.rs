//! Semiclassical and exact spectra for attractive power-law potentials
//! `V(x) = -V0 / x^s`, `0 < s < 2`.
//!
//! * [`semiclassic`]: Maslov index, Bohr–Sommerfeld spectra, limiting cases,
//!   logarithmic potential and the classical action.
//! * [`exact_half`]: the exact `s = 1/2` spectrum from its Hermite-function
//!   eigenvalue equation.
//! * [`scattering`]: s-wave inner phase, phase shift and cross-section term.
//! * [`oracle`]: independent numerical checks (shooting eigensolver,
//!   adaptive quadrature).
//! * [`specialfn`]: Gamma, Bessel J, Airy, Kummer 1F1 and Hermite functions
//!   of real order.
//! * [`acceptance`]: the end-to-end criteria, shared by the test suite and
//!   the `verify` subcommand.

// `!(x > 0.0)` is the NaN-rejecting domain check used throughout
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod acceptance;
pub mod error;
pub mod exact_half;
pub mod exec;
pub mod optimize;
pub mod oracle;
pub mod scattering;
pub mod semiclassic;
pub mod specialfn;
pub mod spectrum;

pub use error::{Error, Result};
pub use exec::Execution;
pub use semiclassic::{EnergyLevel, MaslovResult, PhaseConstants, PowerLawPotential};
