//! Bessel function of the first kind, real order `ν >= 0`, real `z >= 0`.
//!
//! Three regimes, split at documented constants:
//!
//! | range                               | method                                   |
//! |-------------------------------------|------------------------------------------|
//! | `z <= SERIES_MAX_Z`                 | ascending power series                   |
//! | `SERIES_MAX_Z < z <= hankel_min(ν)` | Miller backward recurrence, Γ-normalized |
//! | `z > hankel_min(ν)`                 | Hankel asymptotic expansion              |
//!
//! Accuracy: relative 1e-10 away from zeros of `J_ν`, absolute
//! `1e-10 · sqrt(2/(πz))` near them. The Hankel branch keeps that accuracy for
//! all `z` in range, but the phase `z - νπ/2 - π/4` loses absolute precision
//! like `z · ε`, so results degrade once `z` approaches `1/rel_tol`.

use std::f64::consts::PI;

use super::gamma::{cos_pi, ln_gamma, sin_pi};
use crate::error::{domain, Result};

/// Upper end of the power-series regime.
pub const SERIES_MAX_Z: f64 = 2.0;
/// Base of the Hankel threshold `hankel_min(ν) = HANKEL_MIN_Z + ν²`.
pub const HANKEL_MIN_Z: f64 = 40.0;

pub(crate) fn hankel_min(nu: f64) -> f64 {
    HANKEL_MIN_Z + nu * nu
}

/// `J_ν(z)`.
pub fn bessel_j(nu: f64, z: f64) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(domain(format!("bessel_j requires order nu >= 0, got {nu}")));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return Err(domain(format!("bessel_j requires z >= 0, got {z}")));
    }
    if z == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if z <= SERIES_MAX_Z {
        Ok(series(nu, z))
    } else if z <= hankel_min(nu) {
        Ok(miller(nu, z))
    } else {
        Ok(hankel(nu, z))
    }
}

fn prefactor(nu: f64, z: f64) -> f64 {
    // (z/2)^ν / Γ(ν+1), in logs so that large orders stay finite
    (nu * (0.5 * z).ln() - ln_gamma(nu + 1.0).expect("nu + 1 > 0")).exp()
}

pub(crate) fn series(nu: f64, z: f64) -> f64 {
    let q = -0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    prefactor(nu, z) * sum
}

/// Backward recurrence on orders `ν + j`, normalized with
/// `(z/2)^ν = Σ_k (ν + 2k) Γ(ν + k) / k! · J_{ν+2k}(z)`.
pub(crate) fn miller(nu: f64, z: f64) -> f64 {
    let mut top = (z + 40.0 + 6.0 * z.sqrt()).ceil() as usize;
    if top % 2 == 1 {
        top += 1;
    }
    let mut next = 0.0; // f_{j+1}
    let mut cur = 1e-300; // f_j
    // weight of f_{2k}: (ν + 2k) · Γ(ν + k) / (k! Γ(ν + 1)), with k = 0 weight 1
    let mut weights = vec![0.0; top / 2 + 1];
    weights[0] = 1.0;
    let mut u = 1.0;
    for (k, w) in weights.iter_mut().enumerate().skip(1) {
        let kf = k as f64;
        if k > 1 {
            u *= (nu + kf - 1.0) / kf;
        }
        *w = (nu + 2.0 * kf) * u;
    }
    let mut norm = weights[top / 2] * cur;
    for j in (1..=top).rev() {
        let prev = 2.0 * (nu + j as f64) / z * cur - next;
        next = cur;
        cur = prev;
        let idx = j - 1;
        if idx % 2 == 0 {
            norm += weights[idx / 2] * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
        }
    }
    cur / norm * prefactor(nu, z)
}

pub(crate) fn hankel(nu: f64, z: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let inv8z = 1.0 / (8.0 * z);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) * inv8z / kf;
        if term.abs() > last {
            break; // asymptotic series started diverging
        }
        last = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    // cos(z - νπ/2 - π/4) and sin(...) with the order-dependent phase kept exact
    let (sz, cz) = z.sin_cos();
    let phase = 0.5 * nu + 0.25;
    let (sp, cp) = (sin_pi(phase), cos_pi(phase));
    let cos_chi = cz * cp + sz * sp;
    let sin_chi = sz * cp - cz * sp;
    (2.0 / (PI * z)).sqrt() * (p * cos_chi - q * sin_chi)
}
