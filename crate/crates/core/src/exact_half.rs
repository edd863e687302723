//! Exact bound states of `-1/√x`.
//!
//! The levels are the roots `a = (-2E)^{-3/2}` of
//! `√(2a) H_{a-1}(-√(2a)) + H_a(-√(2a)) = 0`, which for large `a` reduces to
//! `cos(πa) + √3 sin(πa) = 0`, i.e. `a = n - 1/6`.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::exec::{self, Execution};
use crate::optimize::bisect;
use crate::specialfn::hermite_h_eval;

/// Largest level count the Hermite evaluation box supports.
pub const MAX_LEVELS: usize = 40;
/// Root tolerance in `a`.
pub const ROOT_XTOL: f64 = 1e-9;
/// Half-width of the search window around `n - 1/6`.
pub const BRACKET_HALF_WIDTH: f64 = 0.4;
/// Half-width of the window removed around `a = 1`.
pub const EXCLUSION_HALF_WIDTH: f64 = 1e-6;
const SCAN_CELLS: usize = 16;
const MAX_A: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteRootResult {
    pub n: usize,
    pub a: f64,
    pub energy: f64,
}

/// Terms `(√(2a) H_{a-1}(z), H_a(z))` at `z = -√(2a)`.
fn terms(a: f64) -> Result<(f64, f64)> {
    if !(a > 0.0 && a <= MAX_A) {
        return Err(domain(format!("a = {a} is outside (0, {MAX_A}]")));
    }
    let root = (2.0 * a).sqrt();
    let lower = hermite_h_eval(a - 1.0, -root)?;
    let upper = hermite_h_eval(a, -root)?;
    Ok((root * lower.value, upper.value))
}

/// The level equation; its positive roots are the exact levels.
pub fn eq19_residual(a: f64) -> Result<f64> {
    let (p, q) = terms(a)?;
    Ok(p + q)
}

/// The residual divided by the size of its two terms, in `[-1, 1]`.
///
/// Same sign as [`eq19_residual`] but free of the growth of `H_a`, which
/// makes sign scans meaningful across the whole box.
pub fn normalized_residual(a: f64) -> Result<f64> {
    let (p, q) = terms(a)?;
    let size = p.abs() + q.abs();
    Ok(if size == 0.0 { 0.0 } else { (p + q) / size })
}

/// Large-`a` limit of the level equation.
pub fn asymptotic_residual(a: f64) -> f64 {
    (PI * a).cos() + 3f64.sqrt() * (PI * a).sin()
}

pub fn energy_from_a(a: f64) -> f64 {
    -0.5 * a.powf(-2.0 / 3.0)
}

pub fn a_from_energy(energy: f64) -> f64 {
    (-2.0 * energy).powf(-1.5)
}

/// Scan points of the window around `n - 1/6`, split around `a = 1`.
fn scan_points(n: usize) -> Vec<f64> {
    let centre = n as f64 - 1.0 / 6.0;
    let (lo, hi) = (centre - BRACKET_HALF_WIDTH, centre + BRACKET_HALF_WIDTH);
    let mut pts: Vec<f64> = (0..=SCAN_CELLS)
        .map(|i| lo + (hi - lo) * i as f64 / SCAN_CELLS as f64)
        .filter(|a| (a - 1.0).abs() > EXCLUSION_HALF_WIDTH)
        .collect();
    if lo < 1.0 && hi > 1.0 {
        pts.push(1.0 - EXCLUSION_HALF_WIDTH);
        pts.push(1.0 + EXCLUSION_HALF_WIDTH);
        pts.sort_by(f64::total_cmp);
    }
    pts
}

/// The `n`-th exact level.
pub fn solve_exact_level(n: usize) -> Result<HermiteRootResult> {
    if n == 0 || n > MAX_LEVELS {
        return Err(domain(format!("level {n} is outside 1..={MAX_LEVELS}")));
    }
    let pts = scan_points(n);
    let values = pts
        .iter()
        .map(|&a| normalized_residual(a))
        .collect::<Result<Vec<_>>>()?;
    let centre = n as f64 - 1.0 / 6.0;
    let excluded = |lo: f64, hi: f64| lo <= 1.0 - EXCLUSION_HALF_WIDTH && hi >= 1.0 + EXCLUSION_HALF_WIDTH;
    let cell = (0..pts.len() - 1)
        .filter(|&i| values[i].signum() != values[i + 1].signum() || values[i] == 0.0)
        .filter(|&i| !excluded(pts[i], pts[i + 1]))
        .min_by(|&i, &j| {
            let d = |k: usize| (0.5 * (pts[k] + pts[k + 1]) - centre).abs();
            d(i).total_cmp(&d(j))
        })
        .ok_or_else(|| Error::Bracket {
            level: n,
            lo: pts[0],
            hi: pts[pts.len() - 1],
            reason: "no sign change of the level equation".into(),
        })?;
    let (lo, hi) = bisect(normalized_residual, pts[cell], pts[cell + 1], ROOT_XTOL, 200)
        .map_err(|e| match e {
            Error::Bracket { lo, hi, reason, .. } => Error::Bracket { level: n, lo, hi, reason },
            other => other,
        })?;
    let a = 0.5 * (lo + hi);
    Ok(HermiteRootResult {
        n,
        a,
        energy: energy_from_a(a),
    })
}

/// Levels `1..=n_max`, each with its own outcome.
pub fn solve_exact_levels(n_max: usize, mode: Execution) -> Result<Vec<Result<HermiteRootResult>>> {
    if n_max == 0 || n_max > MAX_LEVELS {
        return Err(domain(format!("n_max = {n_max} is outside 1..={MAX_LEVELS}")));
    }
    let levels: Vec<usize> = (1..=n_max).collect();
    Ok(exec::map(&levels, mode, |&n| solve_exact_level(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ground_state() {
        let r = solve_exact_level(1).unwrap();
        assert!((r.energy + 0.552).abs() < 2e-3, "{}", r.energy);
        assert_relative_eq!(r.a, 0.862_318_108_4, epsilon = 1e-8);
    }

    #[test]
    fn low_roots_match_reference() {
        let want = [0.862_318_108_4, 1.851_414_171_0, 2.847_060_910_4, 3.844_633_728_3, 4.843_055_458_9];
        for (k, &a) in want.iter().enumerate() {
            let r = solve_exact_level(k + 1).unwrap();
            assert!((r.a - a).abs() < 1e-8, "n={} a={}", k + 1, r.a);
        }
    }

    #[test]
    fn a_equal_one_is_not_a_root_of_this_form() {
        // with physicists' Hermite functions the residual at a = 1 is -√2
        assert_relative_eq!(eq19_residual(1.0).unwrap(), -2f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn residual_changes_sign_across_each_root() {
        for n in [1, 2, 7, 20] {
            let r = solve_exact_level(n).unwrap();
            let lo = eq19_residual(r.a - 5e-7).unwrap();
            let hi = eq19_residual(r.a + 5e-7).unwrap();
            assert!(lo * hi < 0.0, "n={n}");
        }
    }

    #[test]
    fn residual_is_small_on_the_asymptotic_root() {
        let a = 20.0 - 1.0 / 6.0;
        let at = eq19_residual(a).unwrap().abs();
        let swing = eq19_residual(a - 0.25).unwrap().abs().max(eq19_residual(a + 0.25).unwrap().abs());
        assert!(at < 1e-2 * swing, "{at} vs {swing}");
    }

    #[test]
    fn asymptotic_roots() {
        for k in 1..=5 {
            assert!(asymptotic_residual(k as f64 - 1.0 / 6.0).abs() < 1e-12);
        }
    }

    #[test]
    fn levels_increase_and_approach_asymptote() {
        let levels: Vec<_> = solve_exact_levels(12, Execution::Sequential)
            .unwrap()
            .into_iter()
            .map(Result::unwrap)
            .collect();
        for w in levels.windows(2) {
            assert!(w[0].a < w[1].a && w[0].energy < w[1].energy && w[1].energy < 0.0);
        }
        let gap = |r: &HermiteRootResult| (r.a - (r.n as f64 - 1.0 / 6.0)).abs();
        for w in levels[1..].windows(2) {
            assert!(gap(&w[1]) < gap(&w[0]));
        }
        assert!(gap(&levels[9]) < 1e-2);
    }

    #[test]
    fn rejects_out_of_box() {
        assert!(solve_exact_levels(0, Execution::Sequential).is_err());
        assert!(solve_exact_levels(41, Execution::Sequential).is_err());
        assert!(eq19_residual(-1.0).is_err());
    }

    #[test]
    fn energy_a_round_trip() {
        assert_relative_eq!(a_from_energy(energy_from_a(3.7)), 3.7, max_relative = 1e-14);
    }
}
