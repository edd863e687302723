//! Semiclassical spectra tabulated against the shooting oracle.

use crate::error::{domain, Result};
use crate::exec::{self, Execution};
use crate::oracle::{solve_level, OraclePotential, ShootingConfig};
use crate::semiclassic::{energy_log, energy_semiclassical};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRow {
    pub n: usize,
    pub semiclassical: f64,
    /// `None` when the oracle was not requested; NaN when it failed.
    pub oracle: Option<f64>,
    /// `|E_sc - E_oracle| / |E_oracle|`.
    pub rel_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpectrumTable {
    pub rows: Vec<SpectrumRow>,
    /// One line per level whose oracle solve failed.
    pub notes: Vec<String>,
}

fn semiclassical(pot: &OraclePotential, n: usize) -> Result<f64> {
    match pot {
        OraclePotential::PowerLaw(p) => Ok(energy_semiclassical(p, n)?.energy),
        OraclePotential::Log(p) => energy_log(p, n),
    }
}

fn oracle_energy(pot: &OraclePotential, n: usize, estimate: f64) -> Result<f64> {
    let cfg = match pot {
        OraclePotential::PowerLaw(p) => ShootingConfig::for_power_law(p, n)?,
        // level spacing of the logarithm is of order V0
        OraclePotential::Log(p) => ShootingConfig::for_bracket(pot, (estimate - p.v0, estimate + p.v0))?,
    };
    Ok(solve_level(pot, n, &cfg)?.energy)
}

/// Levels `1..=n_max`, optionally with oracle energies. Oracle failures
/// become NaN entries plus a note; the table is always complete.
pub fn spectrum_table(
    pot: &OraclePotential,
    n_max: usize,
    with_oracle: bool,
    mode: Execution,
) -> Result<SpectrumTable> {
    if n_max == 0 {
        return Err(domain("n_max must be at least 1"));
    }
    let levels: Vec<usize> = (1..=n_max).collect();
    let estimates = levels
        .iter()
        .map(|&n| semiclassical(pot, n))
        .collect::<Result<Vec<_>>>()?;
    let mut table = SpectrumTable::default();
    if !with_oracle {
        table.rows = levels
            .iter()
            .zip(&estimates)
            .map(|(&n, &e)| SpectrumRow {
                n,
                semiclassical: e,
                oracle: None,
                rel_error: None,
            })
            .collect();
        return Ok(table);
    }
    let jobs: Vec<(usize, f64)> = levels.iter().copied().zip(estimates.iter().copied()).collect();
    let solved = exec::map(&jobs, mode, |&(n, e)| oracle_energy(pot, n, e));
    for ((n, e), outcome) in jobs.into_iter().zip(solved) {
        let oracle = match outcome {
            Ok(v) => v,
            Err(err) => {
                table.notes.push(format!("level {n}: oracle failed: {err}"));
                f64::NAN
            }
        };
        table.rows.push(SpectrumRow {
            n,
            semiclassical: e,
            oracle: Some(oracle),
            rel_error: Some(((e - oracle) / oracle).abs()),
        });
    }
    Ok(table)
}
