use maslov_core::oracle::{solve_level, OraclePotential, ShootingConfig};
use maslov_core::semiclassic::{LogPotential, PowerLawPotential};

fn solve(pot: &OraclePotential, n: usize, cfg: &ShootingConfig) -> f64 {
    solve_level(pot, n, cfg).unwrap().energy
}

#[test]
fn grid_and_cutoff_changes_stay_within_ten_tolerances() {
    for (s, l, n) in [(0.5, 0, 1), (0.5, 0, 4), (1.5, 0, 1), (1.5, 1, 2), (1.0, 1, 1)] {
        let pot = PowerLawPotential::new(s).unwrap().with_angular_momentum(l);
        let cfg = ShootingConfig::for_power_law(&pot, n).unwrap();
        let pot = pot.into();
        let base = solve(&pot, n, &cfg);
        let limit = 10.0 * cfg.e_tol;

        let finer = ShootingConfig { steps: 2 * cfg.steps, ..cfg };
        let inner = ShootingConfig { r_min: 0.5 * cfg.r_min, ..cfg };
        let outer = ShootingConfig { r_max: 1.5 * cfg.r_max, ..cfg };
        for (what, c) in [("steps", finer), ("r_min", inner), ("r_max", outer)] {
            let e = solve(&pot, n, &c);
            assert!((e - base).abs() < limit, "s={s} l={l} n={n} {what}: {e} vs {base}");
        }
    }
}

#[test]
fn node_count_matches_level() {
    for s in [0.3, 1.0, 1.5] {
        let pot = PowerLawPotential::new(s).unwrap();
        for n in 1..=6 {
            let cfg = ShootingConfig::for_power_law(&pot, n).unwrap();
            let lvl = solve_level(&pot.into(), n, &cfg).unwrap();
            assert_eq!(lvl.nodes, n - 1, "s={s} n={n}");
        }
    }
}

#[test]
fn levels_interlace() {
    let pot = PowerLawPotential::new(0.7).unwrap();
    let energies: Vec<f64> = (1..=8)
        .map(|n| solve(&pot.into(), n, &ShootingConfig::for_power_law(&pot, n).unwrap()))
        .collect();
    assert!(energies.windows(2).all(|w| w[0] < w[1] && w[1] < 0.0));
}

#[test]
fn hydrogen_with_angular_momentum() {
    // E = -1/(2(n + l)²)
    for l in 0..=2u32 {
        let pot = PowerLawPotential::new(1.0).unwrap().with_angular_momentum(l);
        for n in 1..=3usize {
            let cfg = ShootingConfig::for_power_law(&pot, n).unwrap();
            let e = solve(&pot.into(), n, &cfg);
            let k = (n + l as usize) as f64;
            assert!((e + 0.5 / (k * k)).abs() < 1e-6, "l={l} n={n} E={e}");
        }
    }
}

#[test]
fn strength_scaling() {
    // E(V0) = V0^{2/(2-s)} E(1)
    let s = 0.8;
    let unit = PowerLawPotential::new(s).unwrap();
    let strong = unit.with_strength(3.0).unwrap();
    for n in 1..=3 {
        let e1 = solve(&unit.into(), n, &ShootingConfig::for_power_law(&unit, n).unwrap());
        let e3 = solve(&strong.into(), n, &ShootingConfig::for_power_law(&strong, n).unwrap());
        let want = 3f64.powf(2.0 / (2.0 - s)) * e1;
        assert!((e3 - want).abs() < 1e-6 * want.abs(), "n={n}: {e3} vs {want}");
    }
}

#[test]
fn higher_angular_momentum_baselines() {
    // regression values generated by this solver
    let cases = [
        (0.5, 1, 1, -0.361_107_191_7),
        (0.5, 1, 3, -0.213_450_765_6),
        (1.5, 1, 1, -0.021_229_669_6),
        (1.5, 2, 2, -0.000_447_048_4),
    ];
    for (s, l, n, want) in cases {
        let pot = PowerLawPotential::new(s).unwrap().with_angular_momentum(l);
        let e = solve(&pot.into(), n, &ShootingConfig::for_power_law(&pot, n).unwrap());
        assert!((e - want).abs() < 1e-7, "s={s} l={l} n={n}: {e}");
    }
}

#[test]
fn logarithmic_levels() {
    let pot = LogPotential::reduced();
    let op = OraclePotential::Log(pot);
    let cfg = ShootingConfig::for_bracket(&op, (0.0, 2.0)).unwrap();
    let lvl = solve_level(&op, 1, &cfg).unwrap();
    assert!((lvl.energy - 1.044).abs() < 5e-3, "{}", lvl.energy);
    // shifting x0 shifts the spectrum by -V0 ln(x0)
    let moved = LogPotential::new(1.0, 2.0, 1.0, 0.5).unwrap();
    let op = OraclePotential::Log(moved);
    let cfg = ShootingConfig::for_bracket(&op, (-1.0, 1.0)).unwrap();
    let e = solve_level(&op, 1, &cfg).unwrap().energy;
    assert!((e - (lvl.energy - 2f64.ln())).abs() < 1e-6, "{e}");
}

#[test]
fn residual_is_small_at_convergence() {
    let pot = PowerLawPotential::new(0.5).unwrap();
    let cfg = ShootingConfig::for_power_law(&pot, 2).unwrap();
    let lvl = solve_level(&pot.into(), 2, &cfg).unwrap();
    assert!(lvl.residual.abs() < 1e-4, "{}", lvl.residual);
}
