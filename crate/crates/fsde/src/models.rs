//! The two supported models, their closed-form reference solutions, and
//! fuzzy parameter sets reduced to crisp corner models.
//!
//! Geometric Brownian motion:
//!
//! ```text
//!   dX = mu X dt + sigma X dW,     X(t0) = x0 > 0
//!   X(t) = x0 exp((mu - sigma^2 / 2)(t - t0) + sigma W(t))
//! ```
//!
//! Langevin (Ornstein-Uhlenbeck with zero mean level, mu > 0, sigma > 0):
//!
//! ```text
//!   dX = -mu X dt + sigma dW,      X(t0) = x0
//!   X(t) = x0 e^{-mu (t - t0)} + sigma * integral e^{-mu (t - s)} dW(s)
//! ```
//!
//! A fuzzy parameter set holds one triangular fuzzy number per coefficient.
//! Cutting every coefficient at a level `alpha` and keeping either all the
//! lower or all the upper cut endpoints yields an ordinary crisp model; the
//! solvers run those corner models on a shared Brownian path.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzy::TriangularFuzzyNumber;
use crate::stochastic::BrownianPath;

/// Geometric Brownian motion coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GbmParams {
    pub mu: f64,
    pub sigma: f64,
    pub x0: f64,
}

/// Langevin coefficients; `mu` is the mean-reversion rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LangevinParams {
    pub mu: f64,
    pub sigma: f64,
    pub x0: f64,
}

/// A crisp model: drift and diffusion coefficient functions plus the
/// initial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SdeModel {
    Gbm(GbmParams),
    Langevin(LangevinParams),
}

impl SdeModel {
    /// Model with drift `mu x` and diffusion `sigma x`. A negative `sigma`
    /// is unusual (it can arise from wide fuzzy supports) and is allowed
    /// with a warning.
    pub fn gbm(p: GbmParams) -> Self {
        if p.sigma < 0.0 {
            log::warn!(
                "gbm diffusion coefficient sigma = {} is negative; \
                 continuing, but the model is likely misconfigured",
                p.sigma
            );
        }
        Self::Gbm(p)
    }

    /// Model with drift `-mu x` and constant diffusion `sigma`; both
    /// coefficients must be strictly positive.
    pub fn langevin(p: LangevinParams) -> Result<Self> {
        if !(p.mu > 0.0 && p.sigma > 0.0) {
            return Err(Error::NonpositiveLangevinParameter {
                mu: p.mu,
                sigma: p.sigma,
            });
        }
        Ok(Self::Langevin(p))
    }

    /// Drift coefficient `a(t, x)`. Total for all finite inputs; time-
    /// homogeneous for both models, so `t` is unused.
    pub fn drift(&self, _t: f64, x: f64) -> f64 {
        match self {
            Self::Gbm(p) => p.mu * x,
            Self::Langevin(p) => -p.mu * x,
        }
    }

    /// Diffusion coefficient `b(t, x)`.
    pub fn diffusion(&self, _t: f64, x: f64) -> f64 {
        match self {
            Self::Gbm(p) => p.sigma * x,
            Self::Langevin(p) => p.sigma,
        }
    }

    pub fn x0(&self) -> f64 {
        match self {
            Self::Gbm(p) => p.x0,
            Self::Langevin(p) => p.x0,
        }
    }

    /// One-line human-readable description used in trajectory metadata.
    pub fn describe(&self) -> String {
        match self {
            Self::Gbm(p) => format!("gbm(mu={}, sigma={}, x0={})", p.mu, p.sigma, p.x0),
            Self::Langevin(p) => {
                format!("langevin(mu={}, sigma={}, x0={})", p.mu, p.sigma, p.x0)
            }
        }
    }
}

/// Closed-form geometric Brownian motion evaluated at every sampled point
/// of `path`: `X(t_k) = x0 exp((mu - sigma^2/2)(t_k - t0) + sigma W(t_k))`.
/// Requires `x0 > 0`.
pub fn exact_gbm(p: &GbmParams, path: &BrownianPath) -> Result<Vec<(f64, f64)>> {
    if !(p.x0 > 0.0) {
        return Err(Error::NonpositiveInitialState(p.x0));
    }
    let log_drift = p.mu - 0.5 * p.sigma * p.sigma;
    let dt = path.dt();
    Ok(path
        .cumulative()
        .into_iter()
        .enumerate()
        .map(|(k, (t, w))| {
            let elapsed = k as f64 * dt;
            (t, p.x0 * (log_drift * elapsed + p.sigma * w).exp())
        })
        .collect())
}

/// Ornstein-Uhlenbeck reference evaluated on the grid of `path` with the
/// stochastic convolution discretised at the left endpoints:
///
/// ```text
///   X(t_k) = x0 e^{-mu k dt} + sigma * S_k,
///   S_k = sum_{i<k} e^{-mu (k - i) dt} dW_i = e^{-mu dt} (S_{k-1} + dW_{k-1})
/// ```
///
/// The recursion reproduces the left-point sum exactly in real arithmetic
/// and keeps the evaluation linear in the path length. Coefficients must be
/// nonnegative (`sigma = 0` degenerates to pure exponential decay).
pub fn exact_ou(p: &LangevinParams, path: &BrownianPath) -> Result<Vec<(f64, f64)>> {
    if p.mu < 0.0 || p.sigma < 0.0 {
        return Err(Error::NegativeLangevinParameter {
            mu: p.mu,
            sigma: p.sigma,
        });
    }
    let dt = path.dt();
    let decay = (-p.mu * dt).exp();
    let mut out = Vec::with_capacity(path.len() + 1);
    out.push((path.t0(), p.x0));
    let mut conv = 0.0;
    for (i, dw) in path.increments().iter().enumerate() {
        let k = i + 1;
        conv = decay * (conv + dw);
        let x = p.x0 * (-p.mu * (k as f64 * dt)).exp() + p.sigma * conv;
        out.push((path.time(k), x));
    }
    Ok(out)
}

/// Which of the two supported models a fuzzy parameter set describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Gbm,
    Langevin,
}

/// Which endpoint of each alpha-cut a corner model keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerSide {
    Lower,
    Upper,
}

/// Model coefficients as triangular fuzzy numbers. Crisp coefficients are
/// degenerate fuzzy numbers, so a set may mix fuzzy and crisp entries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FuzzyModelParams {
    pub kind: ModelKind,
    pub mu: TriangularFuzzyNumber,
    pub sigma: TriangularFuzzyNumber,
    pub x0: TriangularFuzzyNumber,
}

impl FuzzyModelParams {
    /// Bundles fuzzy coefficients for `kind`. For the Langevin model the
    /// mean-reversion rate must stay positive across its whole support so
    /// that every corner model is well defined.
    pub fn new(
        kind: ModelKind,
        mu: TriangularFuzzyNumber,
        sigma: TriangularFuzzyNumber,
        x0: TriangularFuzzyNumber,
    ) -> Result<Self> {
        if kind == ModelKind::Langevin && !(mu.left() > 0.0) {
            return Err(Error::NonpositiveFuzzySupport(mu.left()));
        }
        Ok(Self {
            kind,
            mu,
            sigma,
            x0,
        })
    }

    /// Crisp model built from one endpoint of every coefficient's alpha-cut:
    /// all lower endpoints or all upper endpoints. Constructor errors (for
    /// example a nonpositive Langevin corner) propagate.
    pub fn corner_model(&self, alpha: f64, side: CornerSide) -> Result<SdeModel> {
        let pick = |f: &TriangularFuzzyNumber| -> Result<f64> {
            let cut = f.alpha_cut(alpha)?;
            Ok(match side {
                CornerSide::Lower => cut.lo(),
                CornerSide::Upper => cut.hi(),
            })
        };
        let mu = pick(&self.mu)?;
        let sigma = pick(&self.sigma)?;
        let x0 = pick(&self.x0)?;
        self.crisp_model(mu, sigma, x0)
    }

    /// Crisp model of this set's kind with explicit coefficient values
    /// (used for corner substitution and vertex enumeration).
    pub fn crisp_model(&self, mu: f64, sigma: f64, x0: f64) -> Result<SdeModel> {
        match self.kind {
            ModelKind::Gbm => Ok(SdeModel::gbm(GbmParams { mu, sigma, x0 })),
            ModelKind::Langevin => SdeModel::langevin(LangevinParams { mu, sigma, x0 }),
        }
    }
}
