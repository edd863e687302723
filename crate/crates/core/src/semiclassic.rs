//! Closed-form semiclassical results for `V(x) = -V0 / x^s`, `0 < s < 2`,
//! in units `ħ = m = 1`.
//!
//! The Bohr–Sommerfeld rule `∫ p dx = π (n + γ)` with the singular inner
//! boundary gives the Maslov index `γ = frac((s - 1 + 2l) / (2 (2 - s)))`,
//! where `frac` truncates toward zero, and the spectrum
//!
//! `E_n = -[ √(2π) Γ(1/s) / Γ(1/s - 1/2) · (n + γ) ]^{2s/(s-2)}`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{domain, Error, Result};
use crate::optimize::golden_max;
use crate::specialfn::{gamma_ratio, ln_gamma};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn check_exponent(s: f64) -> Result<()> {
    if s > 0.0 && s < 2.0 {
        Ok(())
    } else {
        Err(domain(format!("exponent s must lie in (0, 2), got {s}")))
    }
}

fn check_level(n: usize) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(domain("level index n starts at 1"))
    }
}

/// An attractive power-law potential `-V0 / r^s` with angular momentum `l`
/// (`l = 0` is also the half-line problem).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawPotential {
    s: f64,
    v0: f64,
    l: u32,
}

impl PowerLawPotential {
    /// Unit strength, `l = 0`.
    pub fn new(s: f64) -> Result<Self> {
        check_exponent(s)?;
        Ok(Self { s, v0: 1.0, l: 0 })
    }

    pub fn with_strength(mut self, v0: f64) -> Result<Self> {
        if !(v0 > 0.0) || !v0.is_finite() {
            return Err(domain(format!("strength V0 must be positive, got {v0}")));
        }
        self.v0 = v0;
        Ok(self)
    }

    pub fn with_angular_momentum(mut self, l: u32) -> Self {
        self.l = l;
        self
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// `V(r)` without the centrifugal term.
    pub fn value(&self, r: f64) -> f64 {
        -self.v0 * r.powf(-self.s)
    }

    /// Outer classical turning point for a negative energy, ignoring the
    /// centrifugal term: `(V0 / |E|)^{1/s}`.
    pub fn turning_point(&self, energy: f64) -> f64 {
        (self.v0 / energy.abs()).powf(1.0 / self.s)
    }
}

/// Logarithmic potential `V(x) = V0 ln(x / x0)` with explicit `ħ` and `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPotential {
    pub v0: f64,
    pub x0: f64,
    pub hbar: f64,
    pub mass: f64,
}

impl LogPotential {
    pub fn new(v0: f64, x0: f64, hbar: f64, mass: f64) -> Result<Self> {
        for (name, v) in [("V0", v0), ("x0", x0), ("hbar", hbar), ("mass", mass)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { v0, x0, hbar, mass })
    }

    /// The unit system `V0 = ħ²/(2 m x0²) = 1`: `ħ = x0 = 1`, `m = 1/2`.
    pub fn reduced() -> Self {
        Self {
            v0: 1.0,
            x0: 1.0,
            hbar: 1.0,
            mass: 0.5,
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.v0 * (x / self.x0).ln()
    }

    pub fn turning_point(&self, energy: f64) -> f64 {
        self.x0 * (energy / self.v0).exp()
    }
}

/// Maslov index: the raw argument and its signed fractional part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaslovResult {
    pub raw: f64,
    pub gamma: f64,
}

/// `γ(s, l)`, the fractional part taken by truncation toward zero.
pub fn maslov_index(s: f64, l: u32) -> Result<MaslovResult> {
    check_exponent(s)?;
    let raw = (s - 1.0 + 2.0 * l as f64) / (2.0 * (2.0 - s));
    Ok(MaslovResult {
        raw,
        gamma: raw - raw.trunc(),
    })
}

/// Exponents `s` in `(0, 2)` where the raw Maslov argument crosses an integer
/// and `γ` jumps from 1 back to 0, in increasing order below `s_max`.
///
/// The jumps accumulate at `s = 2`; at most `MAX_JUMPS` are returned.
pub fn maslov_jumps(l: u32, s_max: f64) -> Vec<f64> {
    const MAX_JUMPS: u32 = 100_000;
    // raw = k  <=>  s = (4k + 1 - 2l) / (2k + 1)
    let mut out = Vec::new();
    for k in 1..=MAX_JUMPS {
        let s = (4.0 * k as f64 + 1.0 - 2.0 * l as f64) / (2.0 * k as f64 + 1.0);
        if s >= s_max || s >= 2.0 {
            break;
        }
        if s > 0.0 {
            out.push(s);
        }
    }
    out
}

/// Phases of the near-origin (zero-energy) solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConstants {
    /// `s / (2 - s)`, coefficient of the first-derivative term after the
    /// change of variable `z ∝ x^{1-s/2}`.
    pub alpha: f64,
    /// Bessel order of the regular solution, `(2l + 1) / (2 - s)`.
    pub nu: f64,
    /// s-wave inner phase `sπ / (4(2 - s)) + π/2`.
    pub delta: f64,
    /// s-wave scattering phase `sπ / (4(2 - s))`.
    pub lambda: f64,
}

impl PhaseConstants {
    pub fn new(s: f64, l: u32) -> Result<Self> {
        check_exponent(s)?;
        let lambda = s * PI / (4.0 * (2.0 - s));
        Ok(Self {
            alpha: s / (2.0 - s),
            nu: (2.0 * l as f64 + 1.0) / (2.0 - s),
            delta: lambda + FRAC_PI_2,
            lambda,
        })
    }

    /// Phase of `J_ν` at large argument, `νπ/2 + π/4`; equals `delta` for `l = 0`.
    pub fn bessel_phase(&self) -> f64 {
        self.nu * FRAC_PI_2 + FRAC_PI_4
    }
}

/// A bound level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: usize,
    pub energy: f64,
}

/// `ln[ √(2π) Γ(1/s) / Γ(1/s - 1/2) ]`.
fn ln_spectrum_coefficient(s: f64) -> Result<f64> {
    let a = 1.0 / s;
    Ok(LN_SQRT_2PI + ln_gamma(a)? - ln_gamma(a - 0.5)?)
}

/// Bohr–Sommerfeld level `n` of `pot`. Returns `-inf` once `|E|` exceeds
/// the `f64` range (deep levels for `s → 2`).
pub fn energy_semiclassical(pot: &PowerLawPotential, n: usize) -> Result<EnergyLevel> {
    check_level(n)?;
    let s = pot.s;
    let g = maslov_index(s, pot.l)?.gamma;
    let q = n as f64 + g;
    if !(q > 0.0) {
        return Err(domain(format!("n + gamma = {q} must be positive")));
    }
    let ln_abs = 2.0 * s / (s - 2.0) * (ln_spectrum_coefficient(s)? + q.ln())
        + 2.0 / (2.0 - s) * pot.v0.ln();
    Ok(EnergyLevel {
        n,
        energy: -ln_abs.exp(),
    })
}

/// Closed form at `s = 1/2`: `E_n = -(n - 1/6)^{-2/3} / 2`.
pub fn energy_s_half(n: usize) -> Result<EnergyLevel> {
    check_level(n)?;
    Ok(EnergyLevel {
        n,
        energy: -0.5 * (n as f64 - 1.0 / 6.0).powf(-2.0 / 3.0),
    })
}

/// Classical action `∫₀^{x₀} √(2(x^{-s} - x₀^{-s})) dx` at unit strength,
/// with `x₀ = |E|^{-1/s}`.
pub fn action_integral(s: f64, energy: f64) -> Result<f64> {
    check_exponent(s)?;
    if !(energy < 0.0) {
        return Err(domain(format!("action integral needs E < 0, got {energy}")));
    }
    let a = 1.0 / s;
    let ratio = gamma_ratio(a - 0.5, a + 1.0)?;
    Ok((2.0 * PI).sqrt() / (2.0 * s) * ratio * energy.abs().powf(0.5 - a))
}

/// Level type as `s → 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `|E| > 1`, falls to `-∞` as `s → 2`.
    Sinking,
    /// `|E| < 1`, tends to zero as `s → 2`.
    Vanishing,
}

impl Regime {
    /// Classification of a bound energy by magnitude.
    pub fn of_energy(energy: f64) -> Self {
        if energy.abs() > 1.0 {
            Regime::Sinking
        } else {
            Regime::Vanishing
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearTwoLevel {
    pub n: usize,
    pub energy: f64,
    pub regime: Regime,
}

/// Level `n` for `s = 2 - β`, `β ≪ 1`: `E_n = -(2√2/(π n β))^{4/β}`.
pub fn energy_near_two(beta: f64, n: usize) -> Result<NearTwoLevel> {
    check_level(n)?;
    if !(beta > 0.0 && beta < 1.0) {
        return Err(domain(format!("beta must lie in (0, 1), got {beta}")));
    }
    let threshold = near_two_threshold(beta);
    let energy = -((4.0 / beta) * (threshold / n as f64).ln()).exp();
    let regime = if (n as f64) < threshold {
        Regime::Sinking
    } else {
        Regime::Vanishing
    };
    Ok(NearTwoLevel { n, energy, regime })
}

/// The level index `2√2/(πβ)` separating sinking from vanishing levels.
pub fn near_two_threshold(beta: f64) -> f64 {
    2.0 * std::f64::consts::SQRT_2 / (PI * beta)
}

/// Small-exponent limit `E_n = -(n - 1/4)^{-s}`, `0 < s <= 0.1`.
pub fn energy_small_s(s: f64, n: usize) -> Result<EnergyLevel> {
    check_level(n)?;
    if !(s > 0.0 && s <= 0.1) {
        return Err(domain(format!("small-s limit needs 0 < s <= 0.1, got {s}")));
    }
    Ok(EnergyLevel {
        n,
        energy: -(n as f64 - 0.25).powf(-s),
    })
}

/// Bohr–Sommerfeld levels of the logarithmic potential:
/// `E_n = V0 ln[ ħ/(x0 √(m V0)) · √(2π) · (n - 1/4) ]`.
pub fn energy_log(pot: &LogPotential, n: usize) -> Result<f64> {
    check_level(n)?;
    let scale = pot.hbar / (pot.x0 * (pot.mass * pot.v0).sqrt());
    Ok(pot.v0 * (scale * (2.0 * PI).sqrt() * (n as f64 - 0.25)).ln())
}

/// Maximum of the ground-state energy over the exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundStateMax {
    pub s: f64,
    pub energy: f64,
}

/// Bracket tolerance of [`max_ground_state`].
pub const MAX_SEARCH_XTOL: f64 = 1e-6;

/// Maximizes `E_1(s)` (unit strength, `l = 0`) over `[lo, hi] ⊂ (0, 2)`.
pub fn max_ground_state(lo: f64, hi: f64) -> Result<GroundStateMax> {
    if !(lo > 0.0 && hi < 2.0 && lo < hi) {
        return Err(domain(format!("search interval [{lo}, {hi}] must lie inside (0, 2)")));
    }
    let e1 = |s: f64| energy_semiclassical(&PowerLawPotential::new(s)?, 1).map(|l| l.energy);
    let (s, energy) = golden_max(e1, lo, hi, MAX_SEARCH_XTOL)?;
    if s - lo < 2.0 * MAX_SEARCH_XTOL || hi - s < 2.0 * MAX_SEARCH_XTOL {
        return Err(Error::BoundaryMaximum(s));
    }
    Ok(GroundStateMax { s, energy })
}
