//! Fixed Gauss–Legendre rule used by the Airy integral branch.

use std::f64::consts::PI;
use std::sync::OnceLock;

pub(crate) const ORDER: usize = 20;

pub(crate) struct Rule {
    pub nodes: [f64; ORDER],
    pub weights: [f64; ORDER],
}

/// Nodes and weights on `[-1, 1]`, computed once by Newton iteration.
pub(crate) fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut nodes = [0.0; ORDER];
        let mut weights = [0.0; ORDER];
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Rule { nodes, weights }
    })
}

/// Composite rule over `[a, b]` split into `panels` equal pieces.
pub(crate) fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let r = rule();
    let width = (b - a) / panels as f64;
    let half = 0.5 * width;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * width;
        let mut acc = 0.0;
        for (x, w) in r.nodes.iter().zip(r.weights.iter()) {
            acc += w * f(mid + half * x);
        }
        total += acc * half;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        let r = rule();
        assert!((r.weights.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        let v = integrate(|x| x.powi(38) + 3.0 * x.powi(7), -1.0, 1.0, 1);
        assert!((v - 2.0 / 39.0).abs() < 1e-14);
        let g = integrate(|x| (-x * x).exp(), -8.0, 8.0, 8);
        assert!((g - PI.sqrt()).abs() < 1e-14);
    }
}
