//! Euler-Maruyama stepping, fuzzy bound runs, and the vertex envelope.
//!
//! The basic scheme on a grid with step `dt` and Brownian increments `dW_i`:
//!
//! ```text
//!   w_{i+1} = w_i + a(t_i, w_i) dt + b(t_i, w_i) dW_i
//! ```
//!
//! A fuzzy solve cuts every fuzzy coefficient at one membership level,
//! builds the all-lower-endpoint and all-upper-endpoint corner models, and
//! steps both over the *same* Brownian path. The two runs are not
//! guaranteed to stay ordered: drift and diffusion corners can pull in
//! opposite directions within a single step, and every index where the
//! lower run exceeds the upper run is recorded as a crossing ("weak"
//! solution bounds).
//!
//! The vertex envelope instead runs every combination of cut endpoints
//! (up to 2^3 corner models) and takes the pointwise min and max, which is
//! ordered by construction and contains the two-corner band.

use serde::Serialize;

use crate::error::Result;
use crate::models::{CornerSide, FuzzyModelParams, SdeModel};
use crate::stochastic::BrownianPath;

/// Provenance of a solver run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryMeta {
    /// Seed of the driving Brownian path.
    pub seed: u64,
    /// Step size actually used (fine `dt` times the coarsening factor).
    pub dt: f64,
    /// Coarsening factor applied to the fine path.
    #[serde(rename = "r")]
    pub coarsen_factor: usize,
    /// Human-readable model description.
    pub model: String,
}

/// One crisp solver run sampled on its time grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub meta: TrajectoryMeta,
}

impl Trajectory {
    pub fn terminal_time(&self) -> f64 {
        *self
            .times
            .last()
            .expect("trajectory has at least one point")
    }

    pub fn terminal_value(&self) -> f64 {
        *self
            .values
            .last()
            .expect("trajectory has at least one point")
    }
}

/// Lower and upper bound runs of a fuzzy solve on a shared time grid.
///
/// `crossings` lists every index where `lower > upper`; it is empty for
/// envelope results and at membership level 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzyTrajectory {
    pub times: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub alpha: f64,
    pub crossings: Vec<usize>,
}

impl FuzzyTrajectory {
    pub fn terminal_time(&self) -> f64 {
        *self
            .times
            .last()
            .expect("trajectory has at least one point")
    }

    pub fn terminal_bounds(&self) -> (f64, f64) {
        (
            *self
                .lower
                .last()
                .expect("trajectory has at least one point"),
            *self
                .upper
                .last()
                .expect("trajectory has at least one point"),
        )
    }

    /// Number of steps, i.e. grid points after the initial one.
    pub fn steps(&self) -> usize {
        self.times.len().saturating_sub(1)
    }
}

/// Runs Euler-Maruyama for `model` over `path` coarsened by `factor`.
///
/// The coarse increments are exact sums of fine ones, so runs at different
/// factors see the same underlying Brownian motion. Times are computed by
/// index multiplication. Coarsening errors (zero factor, factor not
/// dividing the increment count) propagate.
pub fn euler_maruyama(model: &SdeModel, path: &BrownianPath, factor: usize) -> Result<Trajectory> {
    let coarse = path.coarsen(factor)?;
    let dt = coarse.dt();
    if let SdeModel::Langevin(p) = model {
        // explicit Euler on dX = -mu X dt is only stable for mu dt < 1
        if p.mu * dt >= 1.0 {
            log::warn!(
                "langevin step mu*dt = {} >= 1: the explicit scheme is unstable \
                 at this step size",
                p.mu * dt
            );
        }
    }
    let n = coarse.len();
    let mut times = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    let mut w = model.x0();
    times.push(coarse.time(0));
    values.push(w);
    for (i, dw) in coarse.increments().iter().enumerate() {
        let t = coarse.time(i);
        w = w + model.drift(t, w) * dt + model.diffusion(t, w) * dw;
        times.push(coarse.time(i + 1));
        values.push(w);
    }
    Ok(Trajectory {
        times,
        values,
        meta: TrajectoryMeta {
            seed: path.seed(),
            dt,
            coarsen_factor: factor,
            model: model.describe(),
        },
    })
}

/// Fuzzy solve at one membership level: the all-lower and all-upper corner
/// models stepped over the same path, with crossings recorded wherever the
/// runs change order. At `alpha = 1` both corners collapse to the peak
/// coefficients and the two runs are identical.
pub fn fuzzy_euler_maruyama(
    params: &FuzzyModelParams,
    path: &BrownianPath,
    factor: usize,
    alpha: f64,
) -> Result<FuzzyTrajectory> {
    let lower_run = euler_maruyama(
        &params.corner_model(alpha, CornerSide::Lower)?,
        path,
        factor,
    )?;
    let upper_run = euler_maruyama(
        &params.corner_model(alpha, CornerSide::Upper)?,
        path,
        factor,
    )?;
    Ok(bounds_to_fuzzy(
        lower_run.times,
        lower_run.values,
        upper_run.values,
        alpha,
    ))
}

/// Packs two bound runs on a shared grid into a `FuzzyTrajectory`,
/// flagging every index where the nominal lower value exceeds the upper.
pub fn bounds_to_fuzzy(
    times: Vec<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,
    alpha: f64,
) -> FuzzyTrajectory {
    let crossings = lower
        .iter()
        .zip(&upper)
        .enumerate()
        .filter(|(_, (lo, up))| lo > up)
        .map(|(i, _)| i)
        .collect();
    FuzzyTrajectory {
        times,
        lower,
        upper,
        alpha,
        crossings,
    }
}

/// Pointwise min/max over Euler-Maruyama runs at *every* combination of
/// cut endpoints (all 2^3 corners of `(mu, sigma, x0)`). The result is
/// ordered by construction, has no crossings, and contains the two-corner
/// band of [`fuzzy_euler_maruyama`] pointwise.
pub fn vertex_envelope(
    params: &FuzzyModelParams,
    path: &BrownianPath,
    factor: usize,
    alpha: f64,
) -> Result<FuzzyTrajectory> {
    let mu = params.mu.alpha_cut(alpha)?;
    let sigma = params.sigma.alpha_cut(alpha)?;
    let x0 = params.x0.alpha_cut(alpha)?;
    let ends = |c: crate::fuzzy::AlphaInterval, bit: bool| if bit { c.hi() } else { c.lo() };

    let mut times = Vec::new();
    let mut lower: Vec<f64> = Vec::new();
    let mut upper: Vec<f64> = Vec::new();
    for mask in 0..8u8 {
        let model = params.crisp_model(
            ends(mu, mask & 1 != 0),
            ends(sigma, mask & 2 != 0),
            ends(x0, mask & 4 != 0),
        )?;
        let run = euler_maruyama(&model, path, factor)?;
        if mask == 0 {
            times = run.times;
            lower = run.values.clone();
            upper = run.values;
        } else {
            for (i, v) in run.values.iter().enumerate() {
                lower[i] = lower[i].min(*v);
                upper[i] = upper[i].max(*v);
            }
        }
    }
    Ok(FuzzyTrajectory {
        times,
        lower,
        upper,
        alpha,
        crossings: Vec::new(),
    })
}
