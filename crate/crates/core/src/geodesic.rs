//! Alpha-geodesics between probability vectors, the alpha/dual coordinate
//! representations of positive measures, and natural-parameter geodesics of
//! exponential families.

use crate::error::{Error, Result};
use crate::measures::{PositiveMeasureVec, ProbVec};
use crate::numeric::pairwise_sum;
use crate::scalar::{f_alpha, f_alpha_inv, f_interpolate, f_interpolate_ln, Alpha, Lambda};

/// A point `r(t)` on the alpha-geodesic from `p` to `q`, together with the
/// normalizer `c(t) = 1 / sum_i m_f(t, alpha; p_i, q_i)`.
#[derive(Debug, Clone)]
pub struct GeodesicPoint {
    pub t: f64,
    pub r: ProbVec,
    pub c: f64,
}

/// Interpolate coordinatewise with `m_f`, then renormalize onto the simplex.
/// The endpoints `t = 0` and `t = 1` reproduce the inputs exactly.
pub fn alpha_geodesic_point(
    alpha: Alpha,
    t: f64,
    p: &ProbVec,
    q: &ProbVec,
) -> Result<GeodesicPoint> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let weight = Lambda::new(t).map_err(|_| Error::InvalidParameter {
        name: "t",
        value: t,
        constraint: "must lie in [0, 1]",
    })?;
    if t == 0.0 {
        return Ok(GeodesicPoint {
            t,
            r: p.clone(),
            c: 1.0 / pairwise_sum(p.weights()),
        });
    }
    if t == 1.0 {
        return Ok(GeodesicPoint {
            t,
            r: q.clone(),
            c: 1.0 / pairwise_sum(q.weights()),
        });
    }
    let unnormalized: Result<Vec<f64>> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| f_interpolate(alpha, weight, pi, qi))
        .collect();
    let unnormalized = unnormalized?;
    let total = pairwise_sum(&unnormalized);
    let c = 1.0 / total;
    let r = ProbVec::new(unnormalized.iter().map(|&w| w * c).collect())?;
    Ok(GeodesicPoint { t, r, c })
}

/// Coordinates `theta^i = f_alpha(m_i)` of a positive measure.
#[derive(Debug, Clone)]
pub struct AlphaCoords {
    theta: Vec<f64>,
    alpha: Alpha,
}

impl AlphaCoords {
    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    /// Invert back to the generating masses via `f_alpha^{-1}`.
    pub fn to_masses(&self) -> Result<PositiveMeasureVec> {
        let masses: Result<Vec<f64>> = self
            .theta
            .iter()
            .map(|&t| f_alpha_inv(self.alpha, t))
            .collect();
        PositiveMeasureVec::new(masses?)
    }
}

/// The alpha-representation of a positive measure. Finite `alpha` only.
pub fn alpha_representation(alpha: Alpha, m: &PositiveMeasureVec) -> Result<AlphaCoords> {
    if !alpha.is_finite() {
        return Err(Error::InfiniteAlpha);
    }
    let theta: Result<Vec<f64>> = m.masses().iter().map(|&mi| f_alpha(alpha, mi)).collect();
    Ok(AlphaCoords {
        theta: theta?,
        alpha,
    })
}

/// Dual coordinates `eta_i = f_{-alpha}(m_i)`, i.e. the (-alpha)-representation
/// of the same measure.
#[derive(Debug, Clone)]
pub struct DualCoords {
    eta: Vec<f64>,
    alpha: Alpha,
}

impl DualCoords {
    pub fn eta(&self) -> &[f64] {
        &self.eta
    }

    /// The `alpha` whose dual these coordinates are.
    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    fn negated_alpha(&self) -> Alpha {
        Alpha::new(-self.alpha.value()).expect("negation of a finite alpha is finite")
    }

    /// The potential `psi_alpha = (1-alpha)/2 * sum_i m_i`, whose gradient in
    /// the theta coordinates generates `eta`.
    pub fn psi(&self) -> f64 {
        let total = self
            .to_masses()
            .map(|m| m.total())
            .expect("dual coordinates invert to positive masses");
        (1.0 - self.alpha.value()) / 2.0 * total
    }

    pub fn to_masses(&self) -> Result<PositiveMeasureVec> {
        let neg = self.negated_alpha();
        let masses: Result<Vec<f64>> = self
            .eta
            .iter()
            .map(|&e| f_alpha_inv(neg, e))
            .collect();
        PositiveMeasureVec::new(masses?)
    }
}

/// Dual representation of a positive measure under the given `alpha`.
pub fn dual_representation(alpha: Alpha, m: &PositiveMeasureVec) -> Result<DualCoords> {
    if !alpha.is_finite() {
        return Err(Error::InfiniteAlpha);
    }
    let neg = Alpha::new(-alpha.value())?;
    let eta: Result<Vec<f64>> = m.masses().iter().map(|&mi| f_alpha(neg, mi)).collect();
    Ok(DualCoords { eta: eta?, alpha })
}

type SuffStatFn = dyn Fn(f64) -> Result<Vec<f64>> + Send + Sync;
type LogPartitionFn = dyn Fn(&[f64]) -> Result<f64> + Send + Sync;
type CarrierFn = dyn Fn(f64) -> f64 + Send + Sync;

/// An exponential family `p(x; theta) = exp(theta . T(x) + k(x) - psi(theta))`
/// over a 1-D outcome space (real line or integer categories).
pub struct ExpFamily {
    natural_dim: usize,
    suff_stat: Box<SuffStatFn>,
    log_partition: Box<LogPartitionFn>,
    carrier: Box<CarrierFn>,
}

impl ExpFamily {
    pub fn new(
        natural_dim: usize,
        suff_stat: Box<SuffStatFn>,
        log_partition: Box<LogPartitionFn>,
        carrier: Box<CarrierFn>,
    ) -> Self {
        ExpFamily {
            natural_dim,
            suff_stat,
            log_partition,
            carrier,
        }
    }

    /// Univariate Gaussian with sufficient statistic `(x, x^2)` and natural
    /// parameters `(mu/sigma^2, -1/(2 sigma^2))`.
    pub fn gaussian() -> Self {
        ExpFamily::new(
            2,
            Box::new(|x| Ok(vec![x, x * x])),
            Box::new(|theta: &[f64]| {
                let (t1, t2) = (theta[0], theta[1]);
                if !t1.is_finite() || !(t2 < 0.0) || !t2.is_finite() {
                    return Err(Error::InvalidNaturalParameter(format!(
                        "gaussian requires finite theta with theta[1] < 0, got ({t1}, {t2})"
                    )));
                }
                Ok(-t1 * t1 / (4.0 * t2) + 0.5 * (std::f64::consts::PI / -t2).ln())
            }),
            Box::new(|_| 0.0),
        )
    }

    /// Natural parameters of the Gaussian with the given mean and variance.
    pub fn gaussian_natural(mu: f64, sigma2: f64) -> Result<Vec<f64>> {
        if !(sigma2 > 0.0) || !sigma2.is_finite() || !mu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "sigma2",
                value: sigma2,
                constraint: "variance must be finite and positive",
            });
        }
        Ok(vec![mu / sigma2, -1.0 / (2.0 * sigma2)])
    }

    /// Categorical family over outcomes `{0, ..., n_outcomes - 1}` with the
    /// last logit gauge-fixed to 0; natural dimension `n_outcomes - 1`.
    pub fn categorical(n_outcomes: usize) -> Result<Self> {
        if n_outcomes < 2 {
            return Err(Error::InvalidParameter {
                name: "n_outcomes",
                value: n_outcomes as f64,
                constraint: "must be >= 2",
            });
        }
        let dim = n_outcomes - 1;
        Ok(ExpFamily::new(
            dim,
            Box::new(move |x| {
                let k = x as usize;
                if x.fract() != 0.0 || x < 0.0 || k >= n_outcomes {
                    return Err(Error::InvalidOutcome { value: x });
                }
                let mut t = vec![0.0; dim];
                if k < dim {
                    t[k] = 1.0;
                }
                Ok(t)
            }),
            Box::new(|theta: &[f64]| {
                if theta.iter().any(|t| !t.is_finite()) {
                    return Err(Error::InvalidNaturalParameter(
                        "categorical logits must be finite".to_string(),
                    ));
                }
                // log-sum-exp over the logits plus the gauge-fixed 0
                let m = theta.iter().fold(0.0f64, |m, &t| m.max(t));
                let s: f64 =
                    theta.iter().map(|&t| (t - m).exp()).sum::<f64>() + (-m).exp();
                Ok(m + s.ln())
            }),
            Box::new(|_| 0.0),
        ))
    }

    pub fn natural_dim(&self) -> usize {
        self.natural_dim
    }

    pub fn log_partition(&self, theta: &[f64]) -> Result<f64> {
        self.check_theta(theta)?;
        (self.log_partition)(theta)
    }

    fn check_theta(&self, theta: &[f64]) -> Result<()> {
        if theta.len() != self.natural_dim {
            return Err(Error::LengthMismatch {
                left: theta.len(),
                right: self.natural_dim,
            });
        }
        Ok(())
    }

    pub fn log_density(&self, theta: &[f64], x: f64) -> Result<f64> {
        self.check_theta(theta)?;
        let psi = (self.log_partition)(theta)?;
        let t = (self.suff_stat)(x)?;
        let dot: f64 = theta.iter().zip(t.iter()).map(|(&a, &b)| a * b).sum();
        Ok(dot + (self.carrier)(x) - psi)
    }

    pub fn density(&self, theta: &[f64], x: f64) -> Result<f64> {
        Ok(self.log_density(theta, x)?.exp())
    }
}

/// Density on the natural-parameter geodesic
/// `theta(lambda) = (1-lambda) theta_p + lambda theta_q`, evaluated on the
/// outcome grid and normalized there.
pub fn natural_geodesic_density(
    fam: &ExpFamily,
    theta_p: &[f64],
    theta_q: &[f64],
    lambda: Lambda,
    outcomes: &[f64],
) -> Result<ProbVec> {
    if theta_p.len() != theta_q.len() {
        return Err(Error::LengthMismatch {
            left: theta_p.len(),
            right: theta_q.len(),
        });
    }
    if outcomes.is_empty() {
        return Err(Error::Empty);
    }
    let lam = lambda.value();
    let theta: Vec<f64> = theta_p
        .iter()
        .zip(theta_q.iter())
        .map(|(&a, &b)| (1.0 - lam) * a + lam * b)
        .collect();
    let log_dens: Result<Vec<f64>> = outcomes
        .iter()
        .map(|&x| fam.log_density(&theta, x))
        .collect();
    let log_dens = log_dens?;
    // normalize in the log domain so far-tail grid points stay positive
    let max = log_dens.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v));
    let weights: Vec<f64> = log_dens.iter().map(|&v| (v - max).exp()).collect();
    let total = pairwise_sum(&weights);
    ProbVec::new(weights.iter().map(|&w| w / total).collect())
}

/// Two routes to the same number for the `alpha = 1` divergence between
/// exponential-family members: the geodesical form evaluated through the
/// scalar kernel, and `lambda * KL` computed directly.
#[derive(Debug, Clone, Copy)]
pub struct ScaledKlReport {
    pub geodesical: f64,
    pub scaled_kl: f64,
    pub abs_diff: f64,
}

/// Compare `D_GS(1, lambda)` between the endpoint densities against
/// `lambda * KL` on the same outcome grid.
pub fn verify_scaled_kl(
    fam: &ExpFamily,
    theta_p: &[f64],
    theta_q: &[f64],
    lambda: Lambda,
    outcomes: &[f64],
) -> Result<ScaledKlReport> {
    let p = natural_geodesic_density(fam, theta_p, theta_q, Lambda::ZERO, outcomes)?;
    let q = natural_geodesic_density(fam, theta_p, theta_q, Lambda::ONE, outcomes)?;
    let one = Alpha::new(1.0)?;
    let terms: Result<Vec<f64>> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| Ok(pi * (pi.ln() - f_interpolate_ln(one, lambda, pi, qi)?)))
        .collect();
    let geodesical = pairwise_sum(&terms?);
    let kl_terms: Vec<f64> = p
        .iter()
        .zip(q.iter())
        .map(|(&pi, &qi)| pi * (pi / qi).ln())
        .collect();
    let scaled_kl = lambda.value() * pairwise_sum(&kl_terms);
    Ok(ScaledKlReport {
        geodesical,
        scaled_kl,
        abs_diff: (geodesical - scaled_kl).abs(),
    })
}
