//! Special-function kernel: real arguments only, pure functions.
//!
//! | function          | guaranteed range                  | rel. tolerance |
//! |-------------------|-----------------------------------|----------------|
//! | [`gamma`]         | `x ∈ [-170, 171]`, off the poles  | 1e-10          |
//! | [`bessel_j`]      | `ν >= 0`, `0 <= z <= 1e6`         | 1e-10          |
//! | [`airy`]          | all real `t` (see module notes)   | 1e-10          |
//! | [`kummer_1f1`]    | `|a| <= 50`, `|z| <= 50`          | 1e-10          |
//! | [`hermite_h`]     | `ν ∈ [0, 60]`, `z ∈ [-12, 0]`     | 1e-8           |
//!
//! Near zeros of oscillatory functions the tolerance is absolute, in units of
//! the local amplitude.

mod airy;
mod bessel;
mod gamma;
mod hermite;
mod kummer;
mod legendre;
pub mod reference;

pub use airy::{airy, airy_all, Airy, AI_INTEGRAL_T, BI_ASYMPTOTIC_T, NEG_ASYMPTOTIC_T};
pub use bessel::{bessel_j, HANKEL_MIN_Z, SERIES_MAX_Z};
pub use gamma::{gamma, gamma_ratio, ln_gamma, rgamma};
pub use hermite::{hermite_h, hermite_h_eval, HermiteValue};
pub use kummer::kummer_1f1;

use crate::error::{domain, Result};

/// Accuracy contract of a special-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionAccuracy {
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl FunctionAccuracy {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Result<Self> {
        if !(rel_tol > 0.0) || !(abs_tol >= 0.0) {
            return Err(domain(format!(
                "accuracy needs rel_tol > 0 and abs_tol >= 0, got ({rel_tol}, {abs_tol})"
            )));
        }
        Ok(Self { rel_tol, abs_tol })
    }

    pub fn accepts(&self, got: f64, want: f64) -> bool {
        (got - want).abs() <= self.abs_tol + self.rel_tol * want.abs()
    }
}

/// Gamma, Airy and Bessel J.
pub const DEFAULT_ACCURACY: FunctionAccuracy = FunctionAccuracy {
    rel_tol: 1e-10,
    abs_tol: 0.0,
};

/// Hermite function inside its guaranteed box.
pub const HERMITE_ACCURACY: FunctionAccuracy = FunctionAccuracy {
    rel_tol: 1e-8,
    abs_tol: 1e-8,
};

/// Right-hand side of the Airy-type transition asymptotic for `H_ν(z)`:
///
/// `e^{z²/2} 2^{ν/2+1/4} π^{1/4} ν^{-1/12} √Γ(ν+1) [cos(πν) Ai(t) - sin(πν) Bi(t)]`,
/// `t = -√2 ν^{1/6} (z + √(2ν+1))`.
///
/// Valid for large `ν` with `z` near the turning point `-√(2ν+1)`.
pub fn hermite_transition(nu: f64, z: f64) -> Result<f64> {
    if !(nu > 0.0) {
        return Err(domain(format!("transition asymptotic needs nu > 0, got {nu}")));
    }
    let t = -std::f64::consts::SQRT_2 * nu.powf(1.0 / 6.0) * (z + (2.0 * nu + 1.0).sqrt());
    let (ai, bi) = airy(t);
    let log_pref = 0.5 * z * z
        + (0.5 * nu + 0.25) * std::f64::consts::LN_2
        + 0.25 * std::f64::consts::PI.ln()
        - nu.ln() / 12.0
        + 0.5 * ln_gamma(nu + 1.0)?;
    let bracket = gamma::cos_pi(nu) * ai - gamma::sin_pi(nu) * bi;
    Ok(log_pref.exp() * bracket)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accuracy_contract() {
        assert!(FunctionAccuracy::new(0.0, 0.0).is_err());
        assert!(FunctionAccuracy::new(1e-3, -1.0).is_err());
        let acc = FunctionAccuracy::new(1e-3, 0.0).unwrap();
        assert!(acc.accepts(1.0005, 1.0));
        assert!(!acc.accepts(1.002, 1.0));
    }

    #[test]
    fn transition_asymptotic_converges_at_turning_point() {
        // z = -√(2ν+1): t = 0, relative deviation shrinks with ν
        let mut last = f64::INFINITY;
        for &nu in &[10.0, 20.0, 40.0] {
            let z = -(2.0_f64 * nu + 1.0).sqrt();
            let dev = (hermite_transition(nu, z).unwrap() / hermite_h(nu, z).unwrap() - 1.0).abs();
            assert!(dev < last, "nu={nu} dev={dev}");
            last = dev;
        }
        assert!(last < 2e-3);
    }

    #[test]
    fn transition_asymptotic_along_eigenvalue_diagonal() {
        // z = -√(2ν) is where the s = 1/2 eigenvalue equation evaluates H_ν
        let devs: Vec<f64> = [10.0, 20.0, 40.0]
            .iter()
            .map(|&nu: &f64| {
                let z = -(2.0 * nu).sqrt();
                (hermite_transition(nu, z).unwrap() / hermite_h(nu, z).unwrap() - 1.0).abs()
            })
            .collect();
        assert!(devs[0] > devs[1] && devs[1] > devs[2], "{devs:?}");
        let z = -(2.0_f64 * 9.8).sqrt();
        let dev = (hermite_transition(9.8, z).unwrap() / hermite_h(9.8, z).unwrap() - 1.0).abs();
        assert!(dev < 3e-3);
    }
}
