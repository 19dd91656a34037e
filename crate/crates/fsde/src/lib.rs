//! Numerical solution of stochastic differential equations whose drift,
//! diffusion and initial parameters are triangular fuzzy numbers.
//!
//! The pipeline: cut every fuzzy coefficient at a membership level to get a
//! parameter interval, reduce the fuzzy problem to crisp corner models at
//! the interval endpoints, and drive each corner with Euler-Maruyama over a
//! *shared* seeded Brownian path. Repeating this across membership levels
//! recovers the fuzzy solution; closed-form references for the two
//! supported models (geometric Brownian motion and a Langevin equation)
//! make step-size convergence measurable.
//!
//! Modules:
//!
//! * [`fuzzy`] - triangular fuzzy numbers, alpha-cuts, two-corner interval
//!   arithmetic;
//! * [`stochastic`] - seeded Brownian paths, exact coarsening, frozen RNG;
//! * [`models`] - the two models, closed-form references, corner reduction;
//! * [`solvers`] - Euler-Maruyama, fuzzy bound runs, vertex envelope;
//! * [`analysis`] - endpoint errors, convergence studies, alpha sweeps;
//! * [`output`] - CSV/JSON rendering with round-trippable floats.

// Validation guards are written as negated comparisons (`!(x > 0.0)`) so
// that NaN fails them; the suggested `partial_cmp` form would hide that.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod error;
pub mod fuzzy;
pub mod models;
pub mod output;
pub mod solvers;
pub mod stochastic;

pub use analysis::{
    alpha_sweep, band_width, convergence_study, crossing_report, default_alpha_grid,
    endpoint_error, AlphaRow, AlphaSweep, ConvergenceEntry, ConvergenceReport, CrossingReport,
};
pub use error::{Error, Result};
pub use fuzzy::{AlphaInterval, TriangularFuzzyNumber};
pub use models::{
    exact_gbm, exact_ou, CornerSide, FuzzyModelParams, GbmParams, LangevinParams, ModelKind,
    SdeModel,
};
pub use solvers::{
    bounds_to_fuzzy, euler_maruyama, fuzzy_euler_maruyama, vertex_envelope, FuzzyTrajectory,
    Trajectory, TrajectoryMeta,
};
pub use stochastic::{derive_seed, grid_steps, BrownianPath, NormalSampler};
