//! The divergence family: KL, Jensen-Shannon, Jeffreys, skew, the
//! alpha-divergence, the alpha-geodesical skew divergence (discrete and
//! continuous), its symmetrization, and the min/max bound functionals.
//!
//! Everything is expressed in nats. The geodesical skew divergence
//!
//! ```text
//! D_GS(alpha, lambda; p, q) = sum_i p_i ln( p_i / m_f(lambda, alpha; p_i, q_i) )
//! ```
//!
//! dispatches its proved closed forms before falling back to the generic
//! kernel: `lambda = 0` gives 0, `lambda = 1` gives KL, `alpha = 1` gives
//! `lambda * KL`, `alpha = -1` gives the skew divergence, and
//! `alpha = +/-inf` give the min/max forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::measures::{Density, NonnegVec, ProbVec};
use crate::numeric::pairwise_sum;
use crate::quadrature::{integrate_adaptive, QuadratureConfig};
use crate::scalar::{f_interpolate_ln, Alpha, Lambda, ALPHA_ONE_TOL};

/// Evaluation points where a density has underflowed are lifted to this
/// floor before entering the scalar kernel; it sits at the edge of the
/// normal f64 range, far below any truncated-support density value.
const DENSITY_FLOOR: f64 = 1e-300;

/// A divergence measured in nats. Finite on all in-contract inputs;
/// nonnegative whenever produced with `alpha >= -1`, possibly negative
/// below that.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DivergenceValue(f64);

impl DivergenceValue {
    pub fn nats(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }
}

impl From<DivergenceValue> for f64 {
    fn from(v: DivergenceValue) -> f64 {
        v.0
    }
}

impl fmt::Display for DivergenceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

/// `sum_i p_i ln(p_i / q_i)` with the `0 ln 0 = 0` convention.
fn kl_sum(p: &[f64], q: &[f64]) -> f64 {
    let terms: Vec<f64> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| if pi == 0.0 { 0.0 } else { pi * (pi / qi).ln() })
        .collect();
    pairwise_sum(&terms)
}

/// Kullback-Leibler divergence `KL[p || q]`. The first argument may carry
/// zeros (they contribute nothing); the second must be strictly positive.
pub fn kl(p: &NonnegVec, q: &ProbVec) -> Result<DivergenceValue> {
    check_len(p.len(), q.len())?;
    Ok(DivergenceValue(kl_sum(p.weights(), q.weights())))
}

/// Jensen-Shannon divergence: the mean of the two KLs to the midpoint
/// mixture. Symmetric and bounded by `ln 2`.
pub fn js(p: &ProbVec, q: &ProbVec) -> Result<DivergenceValue> {
    check_len(p.len(), q.len())?;
    let mid: Vec<f64> = p
        .iter()
        .zip(q.iter())
        .map(|(&a, &b)| 0.5 * (a + b))
        .collect();
    let v = 0.5 * (kl_sum(p.weights(), &mid) + kl_sum(q.weights(), &mid));
    Ok(DivergenceValue(v))
}

/// Jeffreys divergence `KL[p || q] + KL[q || p]`.
pub fn jeffreys(p: &ProbVec, q: &ProbVec) -> Result<DivergenceValue> {
    check_len(p.len(), q.len())?;
    let v = kl_sum(p.weights(), q.weights()) + kl_sum(q.weights(), p.weights());
    Ok(DivergenceValue(v))
}

/// Skew divergence `KL[p || (1-lambda) p + lambda q]`. Finite for every
/// `lambda < 1` even where `q` is much smaller than `p`.
pub fn skew(lambda: Lambda, p: &ProbVec, q: &ProbVec) -> Result<DivergenceValue> {
    check_len(p.len(), q.len())?;
    let lam = lambda.value();
    let mix: Vec<f64> = p
        .iter()
        .zip(q.iter())
        .map(|(&a, &b)| (1.0 - lam) * a + lam * b)
        .collect();
    Ok(DivergenceValue(kl_sum(p.weights(), &mix)))
}

/// The alpha-divergence
/// `4/(1-alpha^2) (1 - sum_i p_i^((1-alpha)/2) q_i^((1+alpha)/2))`,
/// with its analytic limits `KL[p || q]` at `alpha = -1` and `KL[q || p]`
/// at `alpha = 1`.
pub fn alpha_divergence(alpha: Alpha, p: &ProbVec, q: &ProbVec) -> Result<DivergenceValue> {
    if !alpha.is_finite() {
        return Err(Error::InfiniteAlpha);
    }
    check_len(p.len(), q.len())?;
    let a = alpha.value();
    if (a - 1.0).abs() < ALPHA_ONE_TOL {
        return Ok(DivergenceValue(kl_sum(q.weights(), p.weights())));
    }
    if (a + 1.0).abs() < ALPHA_ONE_TOL {
        return Ok(DivergenceValue(kl_sum(p.weights(), q.weights())));
    }
    let u = (1.0 - a) / 2.0;
    let terms: Vec<f64> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| (u * pi.ln() + (1.0 - u) * qi.ln()).exp())
        .collect();
    let coeff = 4.0 / (1.0 - a * a);
    Ok(DivergenceValue(coeff * (1.0 - pairwise_sum(&terms))))
}

/// The alpha-geodesical skew divergence
/// `sum_i p_i ln(p_i / m_f(lambda, alpha; p_i, q_i))`.
pub fn geodesical_skew(
    alpha: Alpha,
    lambda: Lambda,
    p: &ProbVec,
    q: &ProbVec,
) -> Result<DivergenceValue> {
    check_len(p.len(), q.len())?;
    let lam = lambda.value();
    if lam == 0.0 {
        return Ok(DivergenceValue(0.0));
    }
    if lam == 1.0 {
        return Ok(DivergenceValue(kl_sum(p.weights(), q.weights())));
    }
    if !alpha.is_finite() {
        let take_min = alpha.value() > 0.0;
        let terms: Vec<f64> = p
            .iter()
            .zip(q.iter())
            .map(|(&pi, &qi)| {
                let m = if take_min { pi.min(qi) } else { pi.max(qi) };
                pi * (pi / m).ln()
            })
            .collect();
        return Ok(DivergenceValue(pairwise_sum(&terms)));
    }
    if (alpha.value() - 1.0).abs() < ALPHA_ONE_TOL {
        return Ok(DivergenceValue(lam * kl_sum(p.weights(), q.weights())));
    }
    if alpha.value() == -1.0 {
        return skew(lambda, p, q);
    }
    let terms: Result<Vec<f64>> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| Ok(pi * (pi.ln() - f_interpolate_ln(alpha, lambda, pi, qi)?)))
        .collect();
    Ok(DivergenceValue(pairwise_sum(&terms?)))
}

/// Continuous-form alpha-geodesical skew divergence between two densities,
/// integrated over the union of their supports by adaptive composite
/// Gauss-Legendre quadrature.
pub fn geodesical_skew_continuous(
    alpha: Alpha,
    lambda: Lambda,
    p: &Density,
    q: &Density,
    cfg: &QuadratureConfig,
) -> Result<DivergenceValue> {
    let (p_lo, p_hi) = p.support();
    let (q_lo, q_hi) = q.support();
    if p_lo.max(q_lo) >= p_hi.min(q_hi) {
        return Err(Error::DisjointSupports);
    }
    let lo = p_lo.min(q_lo);
    let hi = p_hi.max(q_hi);
    let integrand = |x: f64| {
        let pv = p.evaluate(x);
        if !(pv > 0.0) {
            return 0.0;
        }
        let qv = q.evaluate(x).max(DENSITY_FLOOR);
        let ln_m = f_interpolate_ln(alpha, lambda, pv, qv)
            .expect("kernel inputs are floored to positive values");
        pv * (pv.ln() - ln_m)
    };
    integrate_adaptive(integrand, lo, hi, cfg).map(DivergenceValue)
}

/// `(D_GS[p||q] + D_GS[q||p]) / 2`; symmetric in its arguments by
/// construction.
pub fn symmetrized_geodesical_skew(
    alpha: Alpha,
    lambda: Lambda,
    p: &ProbVec,
    q: &ProbVec,
) -> Result<DivergenceValue> {
    let forward = geodesical_skew(alpha, lambda, p, q)?;
    let backward = geodesical_skew(alpha, lambda, q, p)?;
    Ok(DivergenceValue(0.5 * (forward.0 + backward.0)))
}

/// `sum_i p_i ln(p_i / max(p_i, q_i))`: the greatest lower bound of the
/// geodesical skew divergence over all `(alpha, lambda)`. Never positive.
pub fn divergence_lower_bound(p: &ProbVec, q: &ProbVec) -> Result<DivergenceValue> {
    check_len(p.len(), q.len())?;
    let terms: Vec<f64> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| pi * (pi / pi.max(qi)).ln())
        .collect();
    Ok(DivergenceValue(pairwise_sum(&terms)))
}

/// `sum_i p_i ln(p_i / min(p_i, q_i))`: the least upper bound of the
/// geodesical skew divergence over all `(alpha, lambda)`. Never negative.
pub fn divergence_upper_bound(p: &ProbVec, q: &ProbVec) -> Result<DivergenceValue> {
    check_len(p.len(), q.len())?;
    let terms: Vec<f64> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| pi * (pi / pi.min(qi)).ln())
        .collect();
    Ok(DivergenceValue(pairwise_sum(&terms)))
}
