//! Shooting eigensolver for `-(ħ²/2m) ψ'' + [V(r) + ħ² l(l+1)/(2m r²)] ψ = E ψ`,
//! `ψ(0) = 0`, `ψ(∞) = 0`.
//!
//! The equation is integrated on a logarithmic grid `x = ln r` with
//! `φ = r^{-1/2} ψ`, which turns it into `φ'' = g(x) φ`,
//! `g = (2m/ħ²) r² (V - E) + (l + 1/2)²`, free of first derivatives and
//! smooth at the singular origin. Numerov's recurrence runs outward from
//! `r_min` (series start) and inward from `r_max` (decaying start) to the
//! outer turning point.
//!
//! With both pieces normalized to agree at the matching point, the number of
//! eigenvalues below `E` is the node count of the joined function plus one
//! when the log-derivative mismatch `φ'_out/φ_out - φ'_in/φ_in` is negative.
//! Bisection on that count isolates level `n`, and inside the final window it
//! is bisection on the sign of the mismatch.

use crate::error::{domain, Error, Result};
use crate::exec::{self, Execution};
use crate::semiclassic::{energy_semiclassical, maslov_index, LogPotential, PowerLawPotential};

/// Potentials the oracle can solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OraclePotential {
    /// `-V0 r^{-s}` in units `ħ = m = 1`.
    PowerLaw(PowerLawPotential),
    /// `V0 ln(r/x0)` with its own `ħ` and `m`, `l = 0`.
    Log(LogPotential),
}

impl OraclePotential {
    fn coupling(&self) -> f64 {
        match self {
            OraclePotential::PowerLaw(_) => 2.0,
            OraclePotential::Log(p) => 2.0 * p.mass / (p.hbar * p.hbar),
        }
    }

    fn l(&self) -> u32 {
        match self {
            OraclePotential::PowerLaw(p) => p.l(),
            OraclePotential::Log(_) => 0,
        }
    }

    fn value(&self, r: f64) -> f64 {
        match self {
            OraclePotential::PowerLaw(p) => p.value(r),
            OraclePotential::Log(p) => p.value(r),
        }
    }

    /// Outer turning point of `V(r) = E` (centrifugal term ignored).
    fn turning_point(&self, energy: f64) -> Result<f64> {
        match self {
            OraclePotential::PowerLaw(p) => {
                if energy >= 0.0 {
                    return Err(domain(format!("bound states of -V0/r^s need E < 0, got {energy}")));
                }
                Ok(p.turning_point(energy))
            }
            OraclePotential::Log(p) => Ok(p.turning_point(energy)),
        }
    }
}

impl From<PowerLawPotential> for OraclePotential {
    fn from(p: PowerLawPotential) -> Self {
        OraclePotential::PowerLaw(p)
    }
}

impl From<LogPotential> for OraclePotential {
    fn from(p: LogPotential) -> Self {
        OraclePotential::Log(p)
    }
}

/// Discretization, bracket and tolerance of one solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
    pub e_bracket: (f64, f64),
    pub e_tol: f64,
    /// 1: `r^{l+1}`; 2: adds the `r^{2-s}` correction; 3: adds the `E r²` term.
    pub series_order: u32,
}

pub const DEFAULT_R_MIN: f64 = 1e-6;
pub const DEFAULT_STEPS: usize = 200_000;
pub const DEFAULT_E_TOL: f64 = 1e-8;
/// `∫ κ dr` past the turning point of `E_hi` that the box must cover.
pub const DECAY_DEPTH: f64 = 45.0;
const MIN_STEPS: usize = 10_000;
/// Largest `h·k` (grid step times local wavenumber, in `ln r`) accepted.
pub const MAX_PHASE_STEP: f64 = 0.25;
const MAX_BISECTIONS: usize = 200;

impl ShootingConfig {
    /// Default box for a power-law level: bracket `[3 E_sc, E_sc / 3]` around
    /// the semiclassical estimate.
    ///
    /// For `l > 0` the reduced Maslov index drops the integer part the
    /// centrifugal term adds to it, so the estimate is taken that many levels
    /// higher; otherwise it would aim below the true ground state.
    pub fn for_power_law(pot: &PowerLawPotential, n: usize) -> Result<Self> {
        let whole = |l| maslov_index(pot.s(), l).map(|m| m.raw.trunc().max(0.0) as usize);
        let shift = whole(pot.l())? - whole(0)?;
        let e = energy_semiclassical(pot, n + shift)?.energy;
        let next = energy_semiclassical(pot, n + shift + 1)?.energy;
        if !e.is_finite() {
            return Err(domain("semiclassical estimate overflows; supply a bracket"));
        }
        Self::for_bracket(&OraclePotential::PowerLaw(*pot), (3.0 * e, next / 3.0))
    }

    /// Default box sized for an explicit energy bracket.
    pub fn for_bracket(pot: &OraclePotential, e_bracket: (f64, f64)) -> Result<Self> {
        let (lo, hi) = e_bracket;
        if !(lo < hi) {
            return Err(domain(format!("energy bracket ({lo}, {hi}) is empty")));
        }
        Ok(Self {
            r_min: DEFAULT_R_MIN.min(1e-3 * pot.turning_point(lo)?),
            r_max: required_r_max(pot, lo, hi)?,
            steps: DEFAULT_STEPS,
            e_bracket,
            e_tol: DEFAULT_E_TOL,
            series_order: 2,
        })
    }

    pub fn validate(&self, pot: &OraclePotential) -> Result<()> {
        let (lo, hi) = self.e_bracket;
        if !(self.r_min > 0.0 && self.r_min < self.r_max) {
            return Err(domain("need 0 < r_min < r_max"));
        }
        if self.steps < MIN_STEPS {
            return Err(domain(format!("need at least {MIN_STEPS} steps")));
        }
        if !(self.e_tol > 0.0) || !(lo < hi) {
            return Err(domain("need e_tol > 0 and E_lo < E_hi"));
        }
        let outer = pot.turning_point(hi)?;
        if self.r_max < 3.0 * outer {
            return Err(domain(format!(
                "r_max = {} is below 3x the turning point {outer} of E_hi",
                self.r_max
            )));
        }
        Ok(())
    }
}

fn required_r_max(pot: &OraclePotential, lo: f64, hi: f64) -> Result<f64> {
    let c = pot.coupling();
    let l = pot.l() as f64;
    let t_hi = pot.turning_point(hi)?;
    let t_lo = pot.turning_point(lo)?;
    // accumulate ∫ κ dr beyond the turning point of E_hi
    let mut r = t_hi;
    let mut depth = 0.0;
    let kappa = |r: f64| (c * (pot.value(r) - hi) + l * (l + 1.0) / (r * r)).max(0.0).sqrt();
    let mut k_prev = kappa(r);
    while depth < DECAY_DEPTH {
        let r_next = r * 1.002 + 1e-3 * t_hi;
        let k_next = kappa(r_next);
        depth += 0.5 * (k_prev + k_next) * (r_next - r);
        r = r_next;
        k_prev = k_next;
        if r > 1e12 * t_hi {
            return Err(domain("bound-state tail does not decay within the search range"));
        }
    }
    Ok(r.max(3.0 * t_hi).max(40.0 * t_lo))
}

/// A converged level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleLevel {
    pub n: usize,
    pub energy: f64,
    /// Interior nodes of the eigenfunction.
    pub nodes: usize,
    /// Log-derivative mismatch at the matching point (in `x = ln r`).
    pub residual: f64,
}

struct Grid {
    h: f64,
    r: Vec<f64>,
    /// `c r² V(r)`
    pot: Vec<f64>,
    /// `c r²`
    kin: Vec<f64>,
    lang: f64,
    l: f64,
    series: Series,
}

#[derive(Clone, Copy)]
enum Series {
    PowerLaw { s: f64, c1: f64, c: f64, order: u32 },
    Plain,
}

/// Outcome of one energy probe.
#[derive(Debug, Clone, Copy)]
struct Probe {
    nodes: usize,
    mismatch: f64,
}

impl Probe {
    fn count(&self) -> usize {
        self.nodes + usize::from(self.mismatch < 0.0)
    }
}

impl Grid {
    fn new(pot: &OraclePotential, cfg: &ShootingConfig) -> Self {
        let c = pot.coupling();
        let l = pot.l() as f64;
        let x_min = cfg.r_min.ln();
        let h = (cfg.r_max.ln() - x_min) / cfg.steps as f64;
        let r: Vec<f64> = (0..=cfg.steps).map(|j| (x_min + j as f64 * h).exp()).collect();
        let pot_term = r.iter().map(|&r| c * r * r * pot.value(r)).collect();
        let kin = r.iter().map(|&r| c * r * r).collect();
        let series = match pot {
            OraclePotential::PowerLaw(p) => {
                let s = p.s();
                let denom = (l + 3.0 - s) * (l + 2.0 - s) - l * (l + 1.0);
                Series::PowerLaw {
                    s,
                    c1: -c * p.v0() / denom,
                    c,
                    order: cfg.series_order,
                }
            }
            OraclePotential::Log(_) => Series::Plain,
        };
        Self {
            h,
            r,
            pot: pot_term,
            kin,
            lang: (l + 0.5) * (l + 0.5),
            l,
            series,
        }
    }

    /// Largest phase advance per step at energy `e`.
    fn phase_step(&self, e: f64) -> f64 {
        let worst = (0..self.r.len()).map(|j| -self.g(j, e)).fold(0.0, f64::max);
        self.h * worst.sqrt()
    }

    fn g(&self, j: usize, e: f64) -> f64 {
        self.pot[j] - e * self.kin[j] + self.lang
    }

    fn start(&self, r: f64, e: f64) -> f64 {
        let lead = r.powf(self.l + 0.5);
        match self.series {
            Series::PowerLaw { s, c1, c, order } => {
                let mut corr = 1.0;
                if order >= 2 {
                    corr += c1 * r.powf(2.0 - s);
                }
                if order >= 3 {
                    corr -= c * e / (4.0 * self.l + 6.0) * r * r;
                }
                lead * corr
            }
            Series::Plain => lead,
        }
    }

    fn matching_index(&self, e: f64) -> usize {
        let last = self.r.len() - 1;
        let m = (0..=last).rev().find(|&j| self.g(j, e) < 0.0).unwrap_or_else(|| {
            (0..=last)
                .min_by(|&a, &b| self.g(a, e).total_cmp(&self.g(b, e)))
                .unwrap_or(last / 2)
        });
        m.clamp(2, last - 2)
    }

    fn probe(&self, e: f64) -> Probe {
        let last = self.r.len() - 1;
        let m = self.matching_index(e);
        let f = self.h * self.h / 12.0;
        let w = |j: usize| 1.0 - f * self.g(j, e);

        // outward: keep φ at m-1, m, m+1
        let (mut p0, mut p1) = (self.start(self.r[0], e), self.start(self.r[1], e));
        let (mut w0, mut w1) = (w(0), w(1));
        let mut nodes_out = usize::from(p0 * p1 < 0.0);
        let mut out = [0.0; 3];
        if m - 1 == 1 {
            out[0] = p1;
        }
        for j in 2..=m + 1 {
            let w2 = w(j);
            let p2 = ((12.0 - 10.0 * w1) * p1 - w0 * p0) / w2;
            if j <= m && p2 * p1 < 0.0 {
                nodes_out += 1;
            }
            if j + 1 >= m {
                out[j + 1 - m] = p2;
            }
            (p0, p1, w0, w1) = (p1, p2, w1, w2);
            if p1.abs() > 1e200 {
                p0 *= 1e-200;
                p1 *= 1e-200;
                out.iter_mut().for_each(|v| *v *= 1e-200);
            }
        }

        // Inward from r_max with a decaying start. Where h²g > 1 the solution
        // has long been negligible and Numerov's weights lose sign stability,
        // so the sweep starts at the first such point instead.
        let last = (m + 3..=last)
            .find(|&j| self.h * self.h * self.g(j, e) > 1.0)
            .unwrap_or(last);
        let gn = self.g(last, e).max(0.0);
        let (mut q0, mut q1) = (1e-200, 1e-200 * (self.h * gn.sqrt()).exp());
        let (mut v0, mut v1) = (w(last), w(last - 1));
        let mut nodes_in = 0;
        let mut inn = [0.0; 3];
        for j in (m - 1..=last - 2).rev() {
            let v2 = w(j);
            let q2 = ((12.0 - 10.0 * v1) * q1 - v0 * q0) / v2;
            if j >= m && q2 * q1 < 0.0 {
                nodes_in += 1;
            }
            if j <= m + 1 {
                inn[j + 1 - m] = q2;
            }
            (q0, q1, v0, v1) = (q1, q2, v1, v2);
            if q1.abs() > 1e200 {
                q0 *= 1e-200;
                q1 *= 1e-200;
                inn.iter_mut().for_each(|v| *v *= 1e-200);
            }
        }
        if m + 1 == last - 1 {
            inn[2] = 1e-200 * (self.h * gn.sqrt()).exp();
        }

        let log_deriv = |v: [f64; 3]| (v[2] - v[0]) / (2.0 * self.h * v[1]);
        Probe {
            nodes: nodes_out + nodes_in,
            mismatch: log_deriv(out) - log_deriv(inn),
        }
    }
}

/// Solves for level `n` (1-based, `n - 1` nodes).
pub fn solve_level(pot: &OraclePotential, n: usize, cfg: &ShootingConfig) -> Result<OracleLevel> {
    if n == 0 {
        return Err(domain("level index n starts at 1"));
    }
    cfg.validate(pot)?;
    let mut cfg = *cfg;
    let mut grid = Grid::new(pot, &cfg);
    let (mut lo, mut hi) = cfg.e_bracket;

    let mut refined = false;
    loop {
        let step = grid.phase_step(lo);
        if step > MAX_PHASE_STEP {
            return Err(domain(format!(
                "grid too coarse at E = {lo}: phase step {step:.3} exceeds {MAX_PHASE_STEP}; raise steps"
            )));
        }
        let below = grid.probe(lo).count();
        let above = grid.probe(hi).count();
        if below < n && above >= n {
            break;
        }
        if refined {
            return Err(Error::Bracket {
                level: n,
                lo,
                hi,
                reason: format!("eigenvalue counts {below}..{above} do not straddle level {n}"),
            });
        }
        // one automatic widening, away from whichever side failed
        let width = hi - lo;
        if below >= n {
            lo -= 3.0 * width;
        }
        if above < n {
            hi += match pot {
                OraclePotential::PowerLaw(_) => 0.75 * (0.0 - hi),
                OraclePotential::Log(_) => 3.0 * width,
            };
        }
        cfg.e_bracket = (lo, hi);
        cfg.r_max = cfg.r_max.max(required_r_max(pot, lo, hi)?);
        grid = Grid::new(pot, &cfg);
        refined = true;
    }

    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= cfg.e_tol.max(4.0 * f64::EPSILON * lo.abs()) {
            let energy = 0.5 * (lo + hi);
            let probe = grid.probe(energy);
            return Ok(OracleLevel {
                n,
                energy,
                nodes: probe.nodes,
                residual: probe.mismatch,
            });
        }
        let mid = 0.5 * (lo + hi);
        if grid.probe(mid).count() >= n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_BISECTIONS,
        estimate: hi - lo,
    })
}

/// Solves several power-law levels with their default configurations.
pub fn solve_power_law_levels(
    pot: &PowerLawPotential,
    levels: &[usize],
    mode: Execution,
) -> Vec<Result<OracleLevel>> {
    exec::map(levels, mode, |&n| {
        let cfg = ShootingConfig::for_power_law(pot, n)?;
        solve_level(&OraclePotential::PowerLaw(*pot), n, &cfg)
    })
}
