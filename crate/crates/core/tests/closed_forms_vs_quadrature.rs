use approx::assert_relative_eq;
use maslov_core::oracle::{quad_action, quad_scatter_integral};
use maslov_core::scattering::{delta0, phase_integral, scatter, Units};
use maslov_core::semiclassic::action_integral;
use maslov_core::Error;
use proptest::prelude::*;

#[test]
fn phase_integral_matches_quadrature() {
    for s in [1.1, 1.25, 1.5, 1.75, 1.9] {
        assert_relative_eq!(phase_integral(s).unwrap(), quad_scatter_integral(s).unwrap(), max_relative = 1e-8);
    }
}

#[test]
fn phase_shift_grows_toward_coulomb() {
    let units = Units::default();
    let values: Vec<f64> = (1..=8)
        .map(|k| delta0(1e-2, 1.0 + 0.5f64.powi(k), &units).unwrap())
        .collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]), "{values:?}");
    assert!(matches!(delta0(1e-2, 1.0, &units), Err(Error::Divergent(_))));
    assert!(matches!(quad_scatter_integral(0.9), Err(Error::Divergent(_))));
}

#[test]
fn phase_shift_is_unit_independent() {
    // rescale lengths by c and keep ħ fixed: m → m, V0 → V0 c^{s-2}, E → E c^{-2}
    let s = 1.4;
    let (c, e): (f64, f64) = (3.0, 2e-3);
    let base = delta0(e, s, &Units::default()).unwrap();
    let units = Units::new(c.powf(s - 2.0), 1.0, 1.0).unwrap();
    assert_relative_eq!(delta0(e / (c * c), s, &units).unwrap(), base, max_relative = 1e-12);
    // and an ħ, m change at fixed dimensionless energy
    let units = Units::new(2.0, 0.5, 1.5).unwrap();
    let scale = units.energy_scale(s);
    let other = delta0(e * scale, s, &units).unwrap();
    assert_relative_eq!(other, base, max_relative = 1e-12);
}

#[test]
fn cross_section_times_energy() {
    let units = Units::new(1.0, 2.0, 0.7).unwrap();
    for e in [1e-4, 1e-2, 0.3] {
        let r = scatter(e, 1.5, &units).unwrap();
        assert_relative_eq!(r.sigma0 * e, std::f64::consts::PI * 0.49 / 2.0, max_relative = 1e-14);
    }
}

proptest! {
    #[test]
    fn action_matches_quadrature(s in 0.05f64..1.95, log_e in -6.0f64..3.0) {
        let e = -(10f64.powf(log_e));
        let closed = action_integral(s, e).unwrap();
        let quad = quad_action(s, e).unwrap();
        prop_assert!((closed - quad).abs() <= 1e-8 * closed.abs(), "{closed} vs {quad}");
    }

    #[test]
    fn phase_integral_matches_quadrature_everywhere(s in 1.05f64..1.95) {
        let closed = phase_integral(s).unwrap();
        let quad = quad_scatter_integral(s).unwrap();
        prop_assert!((closed - quad).abs() <= 1e-8 * closed, "{closed} vs {quad}");
    }
}
