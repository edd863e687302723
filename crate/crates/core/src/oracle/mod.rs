//! Independent numerical ground truth for the closed forms.

pub mod quadrature;
pub mod shooting;

pub use quadrature::{integrate, quad_action, quad_scatter_integral, Quadrature};
pub use shooting::{
    solve_level, solve_power_law_levels, OracleLevel, OraclePotential, ShootingConfig,
};
