//! Probability vectors, positive measures, and 1-D densities, plus the
//! generators used throughout the test and verification suites
//! (binomial pmfs, Gaussian densities).

use crate::error::{Error, Result};
use crate::numeric::pairwise_sum;

/// Tolerance on `|sum - 1|` for normalized weight vectors.
pub const UNIT_SUM_TOL: f64 = 1e-9;

/// How zero weights in raw input are treated during normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormalizeMode {
    /// Reject any non-positive weight (the default).
    Strict,
    /// Replace exact zeros by `eps` before renormalizing. Negative weights
    /// are still rejected.
    Clamp { eps: f64 },
}

impl Default for NormalizeMode {
    fn default() -> Self {
        NormalizeMode::Strict
    }
}

/// A strictly positive probability vector: every weight `> 0` and the total
/// within [`UNIT_SUM_TOL`] of 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVec(Vec<f64>);

impl ProbVec {
    /// Validates `weights` as-is; no rescaling is applied.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty);
        }
        for (index, &w) in weights.iter().enumerate() {
            if w.is_nan() || w < 0.0 {
                return Err(Error::NegativeWeight { index, value: w });
            }
            if w == 0.0 {
                return Err(Error::ZeroWeight { index });
            }
            if !w.is_finite() {
                return Err(Error::InvalidParameter {
                    name: "weight",
                    value: w,
                    constraint: "must be finite",
                });
            }
        }
        let sum = pairwise_sum(&weights);
        if (sum - 1.0).abs() > UNIT_SUM_TOL {
            return Err(Error::NotNormalized {
                sum,
                tol: UNIT_SUM_TOL,
            });
        }
        Ok(ProbVec(weights))
    }

    /// Normalizes `raw` by its total, honoring the zero-weight policy.
    pub fn normalized(raw: &[f64], mode: NormalizeMode) -> Result<Self> {
        normalize(raw, mode)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.0.iter()
    }

    pub fn to_nonneg(&self) -> NonnegVec {
        NonnegVec(self.0.clone())
    }
}

impl std::ops::Index<usize> for ProbVec {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// A nonnegative probability vector (zeros allowed), summing to 1 within
/// [`UNIT_SUM_TOL`]. This is the admissible first argument of the KL
/// divergence.
#[derive(Debug, Clone, PartialEq)]
pub struct NonnegVec(Vec<f64>);

impl NonnegVec {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty);
        }
        for (index, &w) in weights.iter().enumerate() {
            if w.is_nan() || w < 0.0 {
                return Err(Error::NegativeWeight { index, value: w });
            }
            if !w.is_finite() {
                return Err(Error::InvalidParameter {
                    name: "weight",
                    value: w,
                    constraint: "must be finite",
                });
            }
        }
        let sum = pairwise_sum(&weights);
        if (sum - 1.0).abs() > UNIT_SUM_TOL {
            return Err(Error::NotNormalized {
                sum,
                tol: UNIT_SUM_TOL,
            });
        }
        Ok(NonnegVec(weights))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }
}

impl From<&ProbVec> for NonnegVec {
    fn from(p: &ProbVec) -> Self {
        p.to_nonneg()
    }
}

/// A finite positive measure: strictly positive masses with no normalization
/// constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveMeasureVec(Vec<f64>);

impl PositiveMeasureVec {
    pub fn new(masses: Vec<f64>) -> Result<Self> {
        if masses.is_empty() {
            return Err(Error::Empty);
        }
        for &m in &masses {
            if !(m > 0.0) || !m.is_finite() {
                return Err(Error::NonPositive {
                    name: "mass",
                    value: m,
                });
            }
        }
        Ok(PositiveMeasureVec(masses))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn masses(&self) -> &[f64] {
        &self.0
    }

    pub fn total(&self) -> f64 {
        pairwise_sum(&self.0)
    }
}

impl From<&ProbVec> for PositiveMeasureVec {
    fn from(p: &ProbVec) -> Self {
        PositiveMeasureVec(p.0.clone())
    }
}

/// Normalize a raw weight sequence into a [`ProbVec`].
///
/// Strict mode rejects zeros; clamp mode lifts them to `eps` first, for user
/// data with sampling zeros. Negative weights are rejected in both modes.
pub fn normalize(raw: &[f64], mode: NormalizeMode) -> Result<ProbVec> {
    if raw.is_empty() {
        return Err(Error::Empty);
    }
    if raw.iter().all(|&w| w == 0.0) {
        return Err(Error::AllZero);
    }
    let mut weights = raw.to_vec();
    for (index, w) in weights.iter_mut().enumerate() {
        if w.is_nan() || *w < 0.0 {
            return Err(Error::NegativeWeight {
                index,
                value: *w,
            });
        }
        if !w.is_finite() {
            return Err(Error::InvalidParameter {
                name: "weight",
                value: *w,
                constraint: "must be finite",
            });
        }
        if *w == 0.0 {
            match mode {
                NormalizeMode::Strict => return Err(Error::ZeroWeight { index }),
                NormalizeMode::Clamp { eps } => *w = eps,
            }
        }
    }
    let total = pairwise_sum(&weights);
    if !(total > 0.0) {
        return Err(Error::AllZero);
    }
    for w in &mut weights {
        *w /= total;
    }
    ProbVec::new(weights)
}

/// Binomial pmf over `{0, ..., n}` as a strictly positive probability vector.
///
/// `prob` must lie strictly inside `(0, 1)`: the boundary values would put
/// zeros in the vector.
pub fn binomial_pmf(n: u32, prob: f64) -> Result<ProbVec> {
    if n < 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            constraint: "must be >= 1",
        });
    }
    if !(prob > 0.0 && prob < 1.0) {
        return Err(Error::InvalidParameter {
            name: "prob",
            value: prob,
            constraint: "must lie strictly in (0, 1)",
        });
    }
    // ln k! prefix table; evaluation in the log domain keeps the tails
    // positive far beyond where direct powering would underflow.
    let n_us = n as usize;
    let mut ln_fact = vec![0.0f64; n_us + 1];
    for k in 1..=n_us {
        ln_fact[k] = ln_fact[k - 1] + (k as f64).ln();
    }
    let (ln_p, ln_q) = (prob.ln(), (1.0 - prob).ln());
    let weights: Vec<f64> = (0..=n_us)
        .map(|k| {
            let ln_choose = ln_fact[n_us] - ln_fact[k] - ln_fact[n_us - k];
            (ln_choose + k as f64 * ln_p + (n_us - k) as f64 * ln_q).exp()
        })
        .collect();
    normalize(&weights, NormalizeMode::Strict)
}

/// A 1-D probability density with a finite support interval outside which
/// its mass is negligible.
pub struct Density {
    eval: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    support: (f64, f64),
}

impl Density {
    /// Wrap an arbitrary density evaluation together with its support.
    /// The caller is responsible for `f >= 0` and unit mass on `[lo, hi]`.
    pub fn from_fn<F>(f: F, lo: f64, hi: f64) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidParameter {
                name: "support",
                value: hi - lo,
                constraint: "must be a finite nonempty interval",
            });
        }
        Ok(Density {
            eval: Box::new(f),
            support: (lo, hi),
        })
    }

    /// Normal density with mean `mu` and variance `sigma2`, truncated to
    /// `[mu - 12 sigma, mu + 12 sigma]`. Beyond 12 sigma the density is below
    /// 1e-31 of its peak, far under every tolerance used in this crate.
    pub fn gaussian(mu: f64, sigma2: f64) -> Result<Self> {
        if !(sigma2 > 0.0) || !sigma2.is_finite() || !mu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "sigma2",
                value: sigma2,
                constraint: "variance must be finite and positive",
            });
        }
        let sigma = sigma2.sqrt();
        let norm = 1.0 / (sigma * (2.0 * std::f64::consts::PI).sqrt());
        let eval = move |x: f64| {
            let z = (x - mu) / sigma;
            norm * (-0.5 * z * z).exp()
        };
        Density::from_fn(eval, mu - 12.0 * sigma, mu + 12.0 * sigma)
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }
}

/// Convenience constructor matching the Gaussian experiments.
pub fn gaussian_density(mu: f64, sigma2: f64) -> Result<Density> {
    Density::gaussian(mu, sigma2)
}

/// L1 distance `sum_i |p1_i - p0_i|` between equal-length probability
/// vectors. This is the integral-of-absolute-difference convention, i.e.
/// twice the half-total-variation distance.
pub fn tv_distance(p0: &ProbVec, p1: &ProbVec) -> Result<f64> {
    if p0.len() != p1.len() {
        return Err(Error::LengthMismatch {
            left: p0.len(),
            right: p1.len(),
        });
    }
    let diffs: Vec<f64> = p0
        .iter()
        .zip(p1.iter())
        .map(|(&a, &b)| (b - a).abs())
        .collect();
    Ok(pairwise_sum(&diffs))
}

/// Shannon entropy `-sum_i p_i ln p_i` in nats.
pub fn shannon_entropy(p: &ProbVec) -> f64 {
    let terms: Vec<f64> = p.iter().map(|&w| -w * w.ln()).collect();
    pairwise_sum(&terms)
}
