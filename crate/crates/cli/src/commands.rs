//! Subcommand bodies. Data goes to `out`, diagnostics to stderr.

use std::io::Write;

use maslov_core::acceptance::{self, AcceptanceOptions, Profile, Tolerance};
use maslov_core::exact_half::solve_exact_levels;
use maslov_core::oracle::OraclePotential;
use maslov_core::scattering::{scatter as scatter_at, Units};
use maslov_core::semiclassic::{energy_s_half, maslov_index, maslov_jumps, LogPotential, PowerLawPotential};
use maslov_core::specialfn::reference::reference_table;
use maslov_core::spectrum::spectrum_table;
use maslov_core::{Error, Execution};
use serde::Serialize;

use crate::format::{g12, row};
use crate::{
    CliError, ExactHalfArgs, MaslovArgs, PotentialKind, ProfileArg, ScatterArgs, SpectrumArgs, VerifyArgs,
};

type Out<'a> = &'a mut dyn Write;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Grid points closer than this to a jump are replaced by the jump rows.
const JUMP_MERGE: f64 = 1e-12;

pub fn maslov(out: Out, a: &MaslovArgs) -> Result<(), CliError> {
    if !(a.s_min > 0.0 && a.s_max < 2.0) {
        return Err(usage(format!("range [{}, {}] must lie inside (0, 2)", a.s_min, a.s_max)));
    }
    if !(a.s_min < a.s_max) {
        return Err(usage("s_min must be below s_max"));
    }
    if !(a.step > 0.0) {
        return Err(usage("step must be positive"));
    }
    let count = ((a.s_max - a.s_min) / a.step + 1e-9).floor() as usize;
    let jumps: Vec<f64> = maslov_jumps(a.l, (a.s_max + JUMP_MERGE).min(2.0))
        .into_iter()
        .filter(|&s| s >= a.s_min - JUMP_MERGE)
        .collect();

    // (s, raw, gamma), sorted by s; a jump contributes its left and right limits
    let mut rows: Vec<[f64; 3]> = Vec::with_capacity(count + 1 + 2 * jumps.len());
    for i in 0..=count {
        let s = a.s_min + i as f64 * a.step;
        if jumps.iter().any(|j| (j - s).abs() < JUMP_MERGE) {
            continue;
        }
        let m = maslov_index(s, a.l)?;
        rows.push([s, m.raw, m.gamma]);
    }
    for &s in &jumps {
        let raw = maslov_index(s, a.l)?.raw.round();
        rows.push([s, raw, 1.0]);
        rows.push([s, raw, 0.0]);
    }
    // stable sort keeps left before right at each jump
    rows.sort_by(|x, y| x[0].total_cmp(&y[0]));

    writeln!(out, "s,raw,gamma")?;
    for r in rows {
        writeln!(out, "{}", row(&r))?;
    }
    Ok(())
}

fn spectrum_potential(a: &SpectrumArgs) -> Result<OraclePotential, CliError> {
    match a.potential {
        PotentialKind::Power => {
            if a.x0.is_some() || a.hbar.is_some() || a.mass.is_some() {
                return Err(usage("--x0, --hbar and --mass apply to the logarithmic potential only"));
            }
            let s = a.s.ok_or_else(|| usage("--s is required for the power-law potential"))?;
            let pot = PowerLawPotential::new(s)?.with_strength(a.v0)?.with_angular_momentum(a.l);
            Ok(pot.into())
        }
        PotentialKind::Log => {
            if a.s.is_some() || a.l != 0 {
                return Err(usage("--s and --l apply to the power-law potential only"));
            }
            let reduced = LogPotential::reduced();
            let pot = LogPotential::new(
                a.v0,
                a.x0.unwrap_or(reduced.x0),
                a.hbar.unwrap_or(reduced.hbar),
                a.mass.unwrap_or(reduced.mass),
            )?;
            Ok(pot.into())
        }
    }
}

pub fn spectrum(out: Out, a: &SpectrumArgs, mode: Execution) -> Result<(), CliError> {
    if a.n_max == 0 {
        return Err(usage("n_max must be at least 1"));
    }
    let pot = spectrum_potential(a)?;
    let table = spectrum_table(&pot, a.n_max, a.with_oracle, mode)?;
    for note in &table.notes {
        eprintln!("maslov: {note}");
    }
    if a.with_oracle {
        writeln!(out, "n,energy_semiclassical,energy_oracle,rel_error")?;
    } else {
        writeln!(out, "n,energy_semiclassical")?;
    }
    for r in &table.rows {
        let mut cells = vec![r.semiclassical];
        cells.extend(r.oracle);
        cells.extend(r.rel_error);
        writeln!(out, "{},{}", r.n, row(&cells))?;
    }
    Ok(())
}

pub fn exact_half(out: Out, a: &ExactHalfArgs, mode: Execution) -> Result<(), CliError> {
    let levels = solve_exact_levels(a.n_max, mode).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "n,a,energy_exact,energy_semiclassical,a_minus_asymptotic")?;
    let mut solved = 0;
    for (k, level) in levels.iter().enumerate() {
        let n = k + 1;
        let sc = energy_s_half(n)?.energy;
        let (a_n, e) = match level {
            Ok(r) => {
                solved += 1;
                (r.a, r.energy)
            }
            Err(err) => {
                eprintln!("maslov: level {n}: {err}");
                (f64::NAN, f64::NAN)
            }
        };
        let gap = a_n - (n as f64 - 1.0 / 6.0);
        writeln!(out, "{n},{}", row(&[a_n, e, sc, gap]))?;
    }
    if solved == 0 {
        return Err(usage("no level could be solved"));
    }
    Ok(())
}

#[derive(Serialize)]
struct ScatterReport {
    s: f64,
    energy: f64,
    lambda: f64,
    delta0: f64,
    sigma0: f64,
    validity_ratio: f64,
    warning: Option<String>,
}

#[derive(Serialize)]
struct ErrorReport {
    error: &'static str,
    message: String,
}

fn write_json<T: Serialize>(out: Out, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn scatter(out: Out, a: &ScatterArgs) -> Result<(), CliError> {
    let units = Units::new(a.v0, a.mass, a.hbar)?;
    match scatter_at(a.energy, a.s, &units) {
        Ok(r) => {
            let warning = r.outside_validity().then(|| {
                format!(
                    "energy exceeds the low-energy scale by a factor {}",
                    g12(r.validity_ratio)
                )
            });
            write_json(
                out,
                &ScatterReport {
                    s: r.s,
                    energy: r.energy,
                    lambda: r.lambda,
                    delta0: r.delta0,
                    sigma0: r.sigma0,
                    validity_ratio: r.validity_ratio,
                    warning,
                },
            )
        }
        Err(Error::Divergent(message)) => {
            write_json(
                out,
                &ErrorReport {
                    error: "divergent",
                    message: message.clone(),
                },
            )?;
            Err(CliError::Reported(message, 3))
        }
        Err(e) => Err(e.into()),
    }
}

/// CSV cell, quoted when it contains a separator or quote.
fn quote(cell: &str) -> String {
    if cell.contains([',', '"']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn tolerance_cell(t: Tolerance) -> String {
    match t {
        Tolerance::Absolute(v) => format!("abs {}", g12(v)),
        Tolerance::Relative(v) => format!("rel {}", g12(v)),
    }
}

pub fn verify(out: Out, a: &VerifyArgs, mode: Execution) -> Result<(), CliError> {
    let profile = match a.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let reports = acceptance::run(&AcceptanceOptions {
        profile,
        mode,
        fault: a.inject_fault,
    });
    writeln!(out, "criterion,check,measured,expected,tolerance,result")?;
    for r in &reports {
        for c in &r.checks {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.id,
                quote(&c.label),
                g12(c.measured),
                g12(c.expected),
                tolerance_cell(c.tolerance),
                if c.passed { "PASS" } else { "FAIL" }
            )?;
        }
        if let Some(e) = &r.error {
            writeln!(out, "{},{},nan,nan,,FAIL", r.id, quote(&format!("error: {e}")))?;
        }
    }
    for r in &reports {
        eprintln!("{}", r.summary_line());
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}

pub fn selftest(out: Out) -> Result<(), CliError> {
    writeln!(out, "function,args,value")?;
    for r in reference_table() {
        let args: Vec<String> = r.args.iter().map(|&x| g12(x)).collect();
        writeln!(out, "{},{},{}", r.function, args.join(";"), g12(r.value))?;
    }
    Ok(())
}
