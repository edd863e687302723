//! Kummer's confluent hypergeometric function `₁F₁(a; b; z)`.

use crate::error::{Error, Result};

/// A series value with a running-error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summed {
    pub value: f64,
    /// Sum of absolute term magnitudes; `ε · magnitude` bounds rounding error.
    pub magnitude: f64,
}

const MAX_TERMS: usize = 5000;

/// `₁F₁(a; b; z)`. Documented accuracy: relative 1e-10 for `|z| <= 50`,
/// `|a| <= 50` away from zeros of the function.
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    Ok(kummer_summed(a, b, z)?.value)
}

pub(crate) fn kummer_summed(a: f64, b: f64, z: f64) -> Result<Summed> {
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(Error::Domain(format!("kummer_1f1({a}, {b}, {z}) has non-finite input")));
    }
    if b <= 0.0 && b == b.trunc() {
        return Err(Error::Pole(b));
    }
    let terminating = a <= 0.0 && a == a.trunc();
    if z < 0.0 && !terminating && b - a >= 0.0 {
        // Kummer transformation: all terms positive on the other side
        let inner = series(b - a, b, -z)?;
        let e = z.exp();
        return Ok(Summed {
            value: e * inner.value,
            magnitude: e * inner.magnitude,
        });
    }
    series(a, b, z)
}

fn series(a: f64, b: f64, z: f64) -> Result<Summed> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut mag = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        mag += term.abs();
        if !sum.is_finite() || !mag.is_finite() {
            return Err(Error::Overflow("kummer_1f1"));
        }
        if term == 0.0 {
            break;
        }
        // past the turning point of the terms and negligible
        if kf > (a.abs() + z.abs()) && term.abs() < 1e-17 * sum.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        if k + 1 == MAX_TERMS {
            return Err(Error::NoConvergence {
                iterations: MAX_TERMS,
                estimate: term.abs() / sum.abs(),
            });
        }
    }
    Ok(Summed {
        value: sum,
        magnitude: mag,
    })
}
