//! Low-energy s-wave scattering by `-V0 / r^s`.
//!
//! The phase shift is the WKB phase difference against the free wave,
//!
//! `δ₀ = √(2mE)/ħ · (V0/E)^{1/s} · ∫₀^∞ [√(x^{-s} + 1) - 1] dx`,
//!
//! finite for `1 < s < 2` and evaluated in closed form with Gamma functions.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::semiclassic::PhaseConstants;
use crate::specialfn::gamma;

/// Physical constants and potential strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Units {
    pub v0: f64,
    pub mass: f64,
    pub hbar: f64,
}

impl Default for Units {
    fn default() -> Self {
        Self {
            v0: 1.0,
            mass: 1.0,
            hbar: 1.0,
        }
    }
}

impl Units {
    pub fn new(v0: f64, mass: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("V0", v0), ("mass", mass), ("hbar", hbar)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { v0, mass, hbar })
    }

    /// Energy scale `(m/ħ²)^{s/(2-s)} V0^{2/(2-s)}`; the semiclassical
    /// treatment needs `E` well below it.
    pub fn energy_scale(&self, s: f64) -> f64 {
        let m_over_h2 = self.mass / (self.hbar * self.hbar);
        m_over_h2.powf(s / (2.0 - s)) * self.v0.powf(2.0 / (2.0 - s))
    }
}

/// s-wave quantities at one energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringResult {
    pub energy: f64,
    pub s: f64,
    pub lambda: f64,
    pub delta0: f64,
    pub sigma0: f64,
    /// `E` over [`Units::energy_scale`]; values near or above 1 leave the
    /// semiclassical regime.
    pub validity_ratio: f64,
}

impl ScatteringResult {
    pub fn outside_validity(&self) -> bool {
        self.validity_ratio > 1.0
    }
}

/// Inner phase `λ = sπ / (4(2 - s))`.
pub fn lambda_phase(s: f64) -> Result<f64> {
    Ok(PhaseConstants::new(s, 0)?.lambda)
}

fn check_convergent(s: f64) -> Result<()> {
    if !(s < 2.0) || !(s > 0.0) {
        return Err(domain(format!("exponent s must lie in (0, 2), got {s}")));
    }
    if s <= 1.0 {
        return Err(Error::Divergent(format!(
            "s-wave phase shift diverges for s <= 1 (s = {s})"
        )));
    }
    Ok(())
}

/// `∫₀^∞ [√(x^{-s} + 1) - 1] dx = Γ(2/s - 1) Γ(1 - 1/s) / (2^{2/s-1} Γ(1/s))`.
pub fn phase_integral(s: f64) -> Result<f64> {
    check_convergent(s)?;
    let a = 1.0 / s;
    Ok(gamma(2.0 * a - 1.0)? * gamma(1.0 - a)? / (2f64.powf(2.0 * a - 1.0) * gamma(a)?))
}

/// Zeroth phase shift `δ₀`.
pub fn delta0(energy: f64, s: f64, units: &Units) -> Result<f64> {
    check_convergent(s)?;
    if !(energy > 0.0) || !energy.is_finite() {
        return Err(domain(format!("scattering energy must be positive, got {energy}")));
    }
    let k = (2.0 * units.mass * energy).sqrt() / units.hbar;
    Ok(k * (units.v0 / energy).powf(1.0 / s) * phase_integral(s)?)
}

/// Cross-section contribution `σ₀ = πħ² / (mE)`.
pub fn sigma0(energy: f64, mass: f64, hbar: f64) -> Result<f64> {
    if !(energy > 0.0) || !(mass > 0.0) || !(hbar > 0.0) {
        return Err(domain("sigma0 needs positive energy, mass and hbar"));
    }
    Ok(PI * hbar * hbar / (mass * energy))
}

/// All s-wave quantities at `(E, s)`.
pub fn scatter(energy: f64, s: f64, units: &Units) -> Result<ScatteringResult> {
    let d = delta0(energy, s, units)?;
    Ok(ScatteringResult {
        energy,
        s,
        lambda: lambda_phase(s)?,
        delta0: d,
        sigma0: sigma0(energy, units.mass, units.hbar)?,
        validity_ratio: energy / units.energy_scale(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lambda_values() {
        assert_relative_eq!(lambda_phase(1.0).unwrap(), PI / 4.0, max_relative = 1e-15);
        assert!(lambda_phase(1e-12).unwrap() < 1e-11);
        assert!(lambda_phase(2.0).is_err());
    }

    #[test]
    fn divergence_below_coulomb() {
        let u = Units::default();
        assert!(matches!(delta0(1e-3, 1.0, &u), Err(Error::Divergent(_))));
        assert!(matches!(delta0(1e-3, 0.4, &u), Err(Error::Divergent(_))));
        assert!(matches!(delta0(1e-3, 2.0, &u), Err(Error::Domain(_))));
        assert!(matches!(delta0(-1.0, 1.5, &u), Err(Error::Domain(_))));
    }

    #[test]
    fn energy_scaling() {
        let u = Units::default();
        for &s in &[1.2, 1.5, 1.8] {
            let r = delta0(4e-3, s, &u).unwrap() / delta0(1e-3, s, &u).unwrap();
            assert_relative_eq!(r, 4f64.powf(0.5 - 1.0 / s), max_relative = 1e-13);
        }
    }

    #[test]
    fn large_phase_at_low_energy() {
        let d = delta0(1e-3, 1.5, &Units::default()).unwrap();
        assert!(d > 10.0, "{d}");
    }

    #[test]
    fn grows_toward_coulomb() {
        let u = Units::default();
        let d: Vec<f64> = (1..12)
            .map(|k| delta0(1e-2, 1.0 + 0.5f64.powi(k), &u).unwrap())
            .collect();
        assert!(d.windows(2).all(|w| w[1] > w[0]), "{d:?}");
    }

    #[test]
    fn unit_rescaling_invariance() {
        let s = 1.4;
        let base = Units::new(1.3, 0.7, 1.0).unwrap();
        let c: f64 = 3.0;
        let other = Units { hbar: c, ..base };
        let e = 1e-3 * base.energy_scale(s);
        let e_other = e * other.energy_scale(s) / base.energy_scale(s);
        assert_relative_eq!(
            delta0(e, s, &base).unwrap(),
            delta0(e_other, s, &other).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn sigma_values() {
        assert_relative_eq!(sigma0(PI, 1.0, 1.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(sigma0(2.0, 1.0, 1.0).unwrap() * 2.0, sigma0(1.0, 1.0, 1.0).unwrap());
        assert_relative_eq!(sigma0(1.0, 2.0, 1.0).unwrap() * 2.0, sigma0(1.0, 1.0, 1.0).unwrap());
        let r = scatter(0.37, 1.5, &Units::new(1.0, 2.5, 0.8).unwrap()).unwrap();
        assert_relative_eq!(r.sigma0 * r.energy, PI * 0.64 / 2.5, max_relative = 1e-15);
    }

    #[test]
    fn validity_flag() {
        let u = Units::default();
        assert!(!scatter(1e-3, 1.5, &u).unwrap().outside_validity());
        assert!(scatter(10.0, 1.5, &u).unwrap().outside_validity());
    }
}
