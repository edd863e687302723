//! Airy functions `Ai`, `Bi` and their derivatives on the real line.
//!
//! Regimes (all boundaries are the constants below):
//!
//! * `t < NEG_ASYMPTOTIC_T`: oscillatory asymptotic expansions.
//! * `NEG_ASYMPTOTIC_T <= t < AI_INTEGRAL_T`: Maclaurin series for both.
//! * `t >= AI_INTEGRAL_T`: `Ai` from the steepest-descent integral
//!   `Ai(t) = e^{-ζ}/π ∫₀^∞ exp(-√t u²) cos(u³/3) du`, `ζ = 2t^{3/2}/3`;
//!   `Bi` keeps the series (all terms positive) up to `BI_ASYMPTOTIC_T`, then
//!   its exponential asymptotic expansion.
//!
//! Accuracy: relative 1e-10 on `Ai` for `t >= -7` and on `Bi` for all `t`,
//! absolute `1e-10 · |t|^{-1/4}` in the oscillatory region.

use std::f64::consts::PI;

use super::legendre;

pub const NEG_ASYMPTOTIC_T: f64 = -7.0;
pub const AI_INTEGRAL_T: f64 = 1.0;
pub const BI_ASYMPTOTIC_T: f64 = 12.0;

/// `Ai(0) = 3^{-2/3} / Γ(2/3)`.
pub const AI0: f64 = 0.355_028_053_887_817_2;
/// `-Ai'(0) = 3^{-1/3} / Γ(1/3)`.
pub const AIP0: f64 = 0.258_819_403_792_806_8;
const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Values of both Airy functions and their first derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Airy {
    pub ai: f64,
    pub aip: f64,
    pub bi: f64,
    pub bip: f64,
}

impl Airy {
    /// `Ai·Bi' − Ai'·Bi`, identically `1/π`.
    pub fn wronskian(&self) -> f64 {
        self.ai * self.bip - self.aip * self.bi
    }
}

/// `(Ai(t), Bi(t))`.
pub fn airy(t: f64) -> (f64, f64) {
    let a = airy_all(t);
    (a.ai, a.bi)
}

/// Airy functions with derivatives.
pub fn airy_all(t: f64) -> Airy {
    if t < NEG_ASYMPTOTIC_T {
        return negative_asymptotic(-t);
    }
    let s = series(t);
    if t < AI_INTEGRAL_T {
        return s;
    }
    let (ai, aip) = ai_integral(t);
    let (bi, bip) = if t < BI_ASYMPTOTIC_T {
        (s.bi, s.bip)
    } else {
        bi_asymptotic(t)
    };
    Airy { ai, aip, bi, bip }
}

pub(crate) fn series(t: f64) -> Airy {
    let t3 = t * t * t;
    // f = Σ a_k, g = Σ b_k and their derivatives fp = Σ c_k, gp = Σ d_k
    let (mut a, mut b, mut c, mut d) = (1.0, t, 0.5 * t * t, 1.0);
    let (mut f, mut g, mut fp, mut gp) = (1.0, t, 0.0, 1.0);
    for k in 1..300 {
        let kf = 3.0 * k as f64;
        a *= t3 / (kf * (kf - 1.0));
        b *= t3 / ((kf + 1.0) * kf);
        if k > 1 {
            c *= t3 / ((kf - 3.0) * (kf - 1.0));
        }
        d *= t3 / (kf * (kf - 2.0));
        f += a;
        g += b;
        fp += c;
        gp += d;
        let small = 1e-18 * (f.abs() + g.abs() + fp.abs() + gp.abs());
        if a.abs() + b.abs() + c.abs() + d.abs() < small {
            break;
        }
    }
    Airy {
        ai: AI0 * f - AIP0 * g,
        aip: AI0 * fp - AIP0 * gp,
        bi: SQRT3 * (AI0 * f + AIP0 * g),
        bip: SQRT3 * (AI0 * fp + AIP0 * gp),
    }
}

/// `(Ai, Ai')` for `t > 0` from the steepest-descent integral.
pub(crate) fn ai_integral(t: f64) -> (f64, f64) {
    let rt = t.sqrt();
    let zeta = 2.0 / 3.0 * t * rt;
    // Gaussian factor below e^{-46} beyond u_max
    let u_max = (46.0 / rt).sqrt();
    let panels = 4 + (u_max.powi(3) / 3.0 / 1.5).ceil() as usize;
    let i0 = legendre::integrate(|u| (-rt * u * u).exp() * (u * u * u / 3.0).cos(), 0.0, u_max, panels);
    let i2 = legendre::integrate(
        |u| u * u * (-rt * u * u).exp() * (u * u * u / 3.0).cos(),
        0.0,
        u_max,
        panels,
    );
    let e = (-zeta).exp() / PI;
    let ai = e * i0;
    let aip = -rt * ai - e * i2 / (2.0 * rt);
    (ai, aip)
}

/// Coefficients `u_k` of the Airy asymptotic expansions.
fn u_coeffs(n: usize) -> Vec<f64> {
    let mut u = vec![1.0; n];
    for k in 1..n {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
    }
    u
}

fn v_coeff(u: f64, k: usize) -> f64 {
    let kf = k as f64;
    -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u
}

const ASYMPTOTIC_TERMS: usize = 40;

pub(crate) fn bi_asymptotic(t: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * t.powf(1.5);
    let u = u_coeffs(ASYMPTOTIC_TERMS);
    let (mut su, mut sv) = (0.0f64, 0.0f64);
    let mut zk = 1.0;
    let mut last = f64::INFINITY;
    for (k, &uk) in u.iter().enumerate() {
        let term = uk * zk;
        if term.abs() > last || term.abs() < 1e-17 * su.abs() {
            break;
        }
        last = term.abs();
        su += term;
        sv += v_coeff(uk, k) * zk;
        zk /= zeta;
    }
    let e = zeta.exp() / PI.sqrt();
    let q = t.powf(0.25);
    (e / q * su, e * q * sv)
}

/// Oscillatory expansions at `t = -x`, `x > 0`.
pub(crate) fn negative_asymptotic(x: f64) -> Airy {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let u = u_coeffs(ASYMPTOTIC_TERMS);
    // even/odd parts with alternating signs, truncated at the smallest term
    let (mut pu, mut qu, mut pv, mut qv) = (0.0, 0.0, 0.0, 0.0);
    let mut zk = 1.0;
    let mut last = f64::INFINITY;
    for (k, &uk) in u.iter().enumerate() {
        let term = uk * zk;
        if term.abs() > last || term.abs() < 1e-18 {
            break;
        }
        last = term.abs();
        let vk = v_coeff(uk, k) * zk;
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            pu += sign * term;
            pv += sign * vk;
        } else {
            qu += sign * term;
            qv += sign * vk;
        }
        zk /= zeta;
    }
    let theta = zeta - PI / 4.0;
    let (s, c) = theta.sin_cos();
    let q = x.powf(0.25);
    let a = 1.0 / (PI.sqrt() * q);
    let b = q / PI.sqrt();
    Airy {
        ai: a * (c * pu + s * qu),
        aip: b * (s * pv - c * qv),
        bi: a * (-s * pu + c * qu),
        bip: b * (c * pv + s * qv),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialfn::gamma::gamma;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn values_at_origin() {
        let a = airy_all(0.0);
        let ai0 = 3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0).unwrap();
        assert!(rel(a.ai, ai0) < 1e-14);
        assert!(rel(a.bi, 3f64.sqrt() * a.ai) < 1e-14);
        assert!(rel(-a.aip, 3f64.powf(-1.0 / 3.0) / gamma(1.0 / 3.0).unwrap()) < 1e-14);
    }

    #[test]
    fn reference_values() {
        // standard tables
        assert!(rel(airy_all(1.0).ai, 0.135_292_416_312_881_4) < 1e-12);
        assert!(rel(airy_all(1.0).bi, 1.207_423_594_952_871_3) < 1e-12);
        assert!(rel(airy_all(2.0).ai, 0.034_924_130_423_274_38) < 1e-12);
        assert!(rel(airy_all(5.0).ai, 1.083_444_281_360_744_3e-4) < 1e-11);
        assert!(rel(airy_all(5.0).bi, 657.792_044_171_171_4) < 1e-11);
        assert!(rel(airy_all(-1.0).ai, 0.535_560_883_292_352_1) < 1e-12);
        assert!(rel(airy_all(-10.0).ai, 0.040_241_238_486_443_19) < 1e-9);
    }

    #[test]
    fn wronskian_everywhere() {
        for &t in &[-30.0, -12.0, -7.5, -7.0, -5.0, -2.0, -0.3, 0.0, 0.9, 1.0, 2.0, 6.0, 11.9, 12.5, 25.0] {
            let a = airy_all(t);
            let w = a.wronskian();
            assert!((w * PI - 1.0).abs() < 1e-10, "t={t} w*pi={}", w * PI);
        }
    }

    #[test]
    fn switchovers_are_continuous() {
        let t = NEG_ASYMPTOTIC_T;
        let (s, a) = (series(t), negative_asymptotic(-t));
        let amp = 1.0 / (PI.sqrt() * (-t).powf(0.25));
        assert!((s.ai - a.ai).abs() < 1e-9 * amp);
        assert!((s.bi - a.bi).abs() < 1e-9 * amp);
        assert!((s.aip - a.aip).abs() < 1e-9 * amp * (-t).sqrt());

        let t = AI_INTEGRAL_T;
        let (ai, aip) = ai_integral(t);
        assert!(rel(ai, series(t).ai) < 1e-9);
        assert!(rel(aip, series(t).aip) < 1e-9);

        let t = BI_ASYMPTOTIC_T;
        let (bi, bip) = bi_asymptotic(t);
        assert!(rel(bi, series(t).bi) < 1e-9);
        assert!(rel(bip, series(t).bip) < 1e-9);
    }

    #[test]
    fn oscillatory_value_against_rotated_contour_integral() {
        // Ai(x) = (1/π) ∫₀^∞ exp(-r³/3 - xr/2) sin(π/3 - (√3/2) x r) dr
        let x: f64 = -5.0;
        let oracle = legendre::integrate(
            |r| (-r * r * r / 3.0 - x * r / 2.0).exp() * (PI / 3.0 - 3f64.sqrt() / 2.0 * x * r).sin(),
            0.0,
            12.0,
            64,
        ) / PI;
        assert!((airy_all(x).ai - oracle).abs() < 1e-12);
    }
}
