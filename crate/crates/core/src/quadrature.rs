//! Composite Gauss-Legendre quadrature with panel doubling.

use crate::error::{Error, Result};
use crate::numeric::pairwise_sum;

/// Hard cap on the number of panels tried before giving up (2^12).
pub const MAX_PANELS: usize = 4096;

/// Configuration for the adaptive composite rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Gauss-Legendre nodes per panel; at least 8.
    pub node_count: usize,
    /// Initial number of equal-width panels.
    pub panel_count: usize,
    /// Stop once two successive panel doublings differ by less than this.
    pub abs_tol: f64,
}

impl QuadratureConfig {
    pub fn new(node_count: usize, panel_count: usize, abs_tol: f64) -> Result<Self> {
        if node_count < 8 {
            return Err(Error::InvalidParameter {
                name: "node_count",
                value: node_count as f64,
                constraint: "must be >= 8",
            });
        }
        if panel_count < 1 || panel_count > MAX_PANELS {
            return Err(Error::InvalidParameter {
                name: "panel_count",
                value: panel_count as f64,
                constraint: "must be in [1, 4096]",
            });
        }
        if !(abs_tol > 0.0) {
            return Err(Error::InvalidParameter {
                name: "abs_tol",
                value: abs_tol,
                constraint: "must be positive",
            });
        }
        Ok(QuadratureConfig {
            node_count,
            panel_count,
            abs_tol,
        })
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            node_count: 32,
            panel_count: 1,
            abs_tol: 1e-8,
        }
    }
}

/// An n-point Gauss-Legendre rule on `[-1, 1]`.
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes are the roots of the Legendre polynomial P_n, found by Newton
    /// iteration from the Chebyshev-based initial guess.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "rule needs at least two nodes");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        // Newton starting guesses walk from +1 down; store ascending.
        nodes.reverse();
        weights.reverse();
        GaussLegendre { nodes, weights }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, lo: f64, hi: f64, f: F) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let terms: Vec<f64> = self
            .nodes
            .iter()
            .zip(self.weights.iter())
            .map(|(&x, &w)| w * f(mid + half * x))
            .collect();
        half * pairwise_sum(&terms)
    }
}

/// Value and derivative of the Legendre polynomial P_n at x, by the
/// three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn composite<F: Fn(f64) -> f64>(rule: &GaussLegendre, lo: f64, hi: f64, panels: usize, f: &F) -> f64 {
    let width = (hi - lo) / panels as f64;
    let parts: Vec<f64> = (0..panels)
        .map(|k| {
            let a = lo + k as f64 * width;
            let b = if k == panels - 1 { hi } else { a + width };
            rule.integrate(a, b, f)
        })
        .collect();
    pairwise_sum(&parts)
}

/// Integrate `f` over `[lo, hi]`, doubling the panel count until two
/// successive composite estimates agree within `cfg.abs_tol` (panels capped
/// at [`MAX_PANELS`]).
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if !(hi > lo) {
        return Err(Error::InvalidParameter {
            name: "interval",
            value: hi - lo,
            constraint: "upper bound must exceed lower bound",
        });
    }
    let rule = GaussLegendre::new(cfg.node_count.max(8));
    let mut panels = cfg.panel_count.max(1);
    let mut prev = composite(&rule, lo, hi, panels, &f);
    let mut last_delta = f64::INFINITY;
    while panels <= MAX_PANELS / 2 {
        panels *= 2;
        let cur = composite(&rule, lo, hi, panels, &f);
        last_delta = (cur - prev).abs();
        if last_delta < cfg.abs_tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureNotConverged { panels, last_delta })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_for_polynomials() {
        // n nodes integrate polynomials up to degree 2n-1 exactly
        let rule = GaussLegendre::new(8);
        let got = rule.integrate(0.0, 1.0, |x| x.powi(15));
        assert!((got - 1.0 / 16.0).abs() < 1e-14, "got {got}");
        let got = rule.integrate(-2.0, 3.0, |x| 3.0 * x * x);
        assert!((got - (27.0 + 8.0)).abs() < 1e-12);
    }

    #[test]
    fn nodes_are_symmetric_and_weights_sum_to_two() {
        let rule = GaussLegendre::new(32);
        let wsum: f64 = rule.weights.iter().sum();
        assert!((wsum - 2.0).abs() < 1e-13);
        for (a, b) in rule.nodes.iter().zip(rule.nodes.iter().rev()) {
            assert!((a + b).abs() < 1e-14);
        }
    }

    #[test]
    fn adaptive_integrates_smooth_function() {
        let cfg = QuadratureConfig::default();
        let got = integrate_adaptive(|x: f64| x.exp(), 0.0, 1.0, &cfg).unwrap();
        assert!((got - (std::f64::consts::E - 1.0)).abs() < 1e-10);
    }

    #[test]
    fn adaptive_reports_nonconvergence() {
        // the endpoint singularity keeps successive estimates apart at any
        // panel count this tolerance can realize
        let cfg = QuadratureConfig::new(8, 1, 1e-300).unwrap();
        let r = integrate_adaptive(|x: f64| x.abs().sqrt().recip(), 0.0, 1.0, &cfg);
        assert!(matches!(r, Err(Error::QuadratureNotConverged { .. })));
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(4, 1, 1e-8).is_err());
        assert!(QuadratureConfig::new(8, 0, 1e-8).is_err());
        assert!(QuadratureConfig::new(8, 1, 0.0).is_err());
        assert!(QuadratureConfig::new(8, 1, 1e-8).is_ok());
    }
}
