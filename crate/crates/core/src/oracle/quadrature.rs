//! Globally adaptive Gauss–Kronrod (7/15) quadrature and the two classical
//! integrals used to cross-check the closed forms.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{domain, Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut gauss = fc * WG[3];
    let mut kron = fc * WGK[7];
    for j in 0..7 {
        let x = h * XGK[j];
        let pair = f(c - x) + f(c + x);
        kron += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment {
        a,
        b,
        value: kron * h,
        error: ((kron - gauss) * h).abs(),
    }
}

/// Integrates `f` over the finite interval `[a, b]` until the summed error
/// estimate drops below `max(abs_tol, rel_tol · |I|)`.
pub fn integrate<F>(f: F, a: f64, b: f64, rel_tol: f64, abs_tol: f64) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    const MAX_SEGMENTS: usize = 2000;
    let mut heap = BinaryHeap::new();
    let first = kronrod(&f, a, b);
    let (mut value, mut error) = (first.value, first.error);
    heap.push(first);
    let mut evaluations = 15;
    while error > abs_tol.max(rel_tol * value.abs()) {
        if heap.len() >= MAX_SEGMENTS {
            return Err(Error::NoConvergence {
                iterations: heap.len(),
                estimate: error,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if !value.is_finite() {
            return Err(Error::Overflow("adaptive quadrature"));
        }
    }
    // re-sum to shed accumulated update rounding
    let value = heap.iter().map(|s| s.value).sum();
    let error = heap.iter().map(|s| s.error).sum();
    Ok(Quadrature {
        value,
        error,
        evaluations,
    })
}

/// Relative accuracy requested from the oracle integrals.
pub const ORACLE_REL_TOL: f64 = 1e-12;

/// Classical action `∫₀^{x₀} √(2(x^{-s} - x₀^{-s})) dx`, `x₀ = |E|^{-1/s}`,
/// by direct quadrature.
///
/// With `x = x₀ u` the integral is `√2 x₀^{1-s/2} ∫₀¹ √(u^{-s} - 1) du`. The
/// inner integral is split at `u = 1/2`: `u = w^p`, `p = 2/(2-s)`, removes the
/// origin singularity and `u = 1 - v²` the square-root edge at `u = 1`.
pub fn quad_action(s: f64, energy: f64) -> Result<f64> {
    if !(s > 0.0 && s < 2.0) {
        return Err(domain(format!("exponent s must lie in (0, 2), got {s}")));
    }
    if !(energy < 0.0) {
        return Err(domain(format!("action needs E < 0, got {energy}")));
    }
    let p = 2.0 / (2.0 - s);
    // p w^{p-1} · u^{-s/2} √(1 - u^s) with u = w^p; the powers of w cancel
    let inner = integrate(
        |w: f64| p * (1.0 - w.powf(p * s)).sqrt(),
        0.0,
        0.5f64.powf(1.0 / p),
        ORACLE_REL_TOL,
        0.0,
    )?;
    let edge = integrate(
        |v: f64| {
            // u^{-s} - 1 with u = 1 - v², accurate for small v
            let excess = (-s * (-v * v).ln_1p()).exp_m1();
            2.0 * v * excess.sqrt()
        },
        0.0,
        0.5f64.sqrt(),
        ORACLE_REL_TOL,
        0.0,
    )?;
    let x0 = energy.abs().powf(-1.0 / s);
    Ok(std::f64::consts::SQRT_2 * x0.powf(1.0 - 0.5 * s) * (inner.value + edge.value))
}

/// `∫₀^∞ [√(x^{-s} + 1) - 1] dx` by direct quadrature, `1 < s < 2`.
///
/// `[0, 1]` uses `x = w^p`, `p = 2/(2-s)`; `[1, ∞)` uses `x = w^{-q}`,
/// `q = 1/(s-1)`, which maps the `x^{-s}/2` tail onto a bounded integrand.
pub fn quad_scatter_integral(s: f64) -> Result<f64> {
    if !(s < 2.0) {
        return Err(domain(format!("exponent s must be below 2, got {s}")));
    }
    if !(s > 1.0) {
        return Err(Error::Divergent(format!(
            "phase integral diverges at infinity for s <= 1 (s = {s})"
        )));
    }
    let p = 2.0 / (2.0 - s);
    let q = 1.0 / (s - 1.0);
    let near = integrate(
        |w: f64| {
            let xs = w.powf(p * s);
            p * ((1.0 + xs).sqrt() - xs.sqrt())
        },
        0.0,
        1.0,
        ORACLE_REL_TOL,
        0.0,
    )?;
    let far = integrate(
        |w: f64| q / ((w.powf(q * s) + 1.0).sqrt() + 1.0),
        0.0,
        1.0,
        ORACLE_REL_TOL,
        0.0,
    )?;
    Ok(near.value + far.value)
}
