use thiserror::Error;

/// Errors raised by constructors, interval arithmetic, path handling,
/// solvers and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "triangular fuzzy number must satisfy left <= peak <= right, got ({left}, {peak}, {right})"
    )]
    TfnOrdering { left: f64, peak: f64, right: f64 },

    #[error("membership level must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),

    #[error("interval bounds must satisfy lo <= hi, got [{lo}, {hi}]")]
    IntervalBounds { lo: f64, hi: f64 },

    #[error("operands carry different membership levels ({0} and {1})")]
    AlphaMismatch(f64, f64),

    #[error("divisor interval [{lo}, {hi}] contains zero")]
    DivisorContainsZero { lo: f64, hi: f64 },

    #[error("limit parameter must satisfy t >= 1, got {0}")]
    LimitParameterOutOfRange(f64),

    #[error("step size must be positive and finite, got {0}")]
    NonpositiveStep(f64),

    #[error("path needs at least one increment")]
    EmptyPath,

    #[error("coarsening factor must be at least 1")]
    ZeroCoarseningFactor,

    #[error("coarsening factor {factor} does not divide the increment count {len}")]
    IndivisibleCoarsening { factor: usize, len: usize },

    #[error("end time {t_end} must exceed start time {t0}")]
    EmptyHorizon { t0: f64, t_end: f64 },

    #[error("horizon [{t0}, {t_end}] is not an integer number of steps of size {dt}")]
    GridMismatch { t0: f64, t_end: f64, dt: f64 },

    #[error(
        "mean-reversion rate and noise amplitude must be positive, got mu = {mu}, sigma = {sigma}"
    )]
    NonpositiveLangevinParameter { mu: f64, sigma: f64 },

    #[error("mean-reversion rate and noise amplitude must be nonnegative, got mu = {mu}, sigma = {sigma}")]
    NegativeLangevinParameter { mu: f64, sigma: f64 },

    #[error("initial state must be positive for the closed-form solution, got {0}")]
    NonpositiveInitialState(f64),

    #[error(
        "fuzzy mean-reversion rate must stay positive across its support, got left endpoint {0}"
    )]
    NonpositiveFuzzySupport(f64),

    #[error("exact solution sequence is empty")]
    EmptyExactSolution,

    #[error("trajectory ends at t = {approx} but the reference ends at t = {exact}")]
    HorizonMismatch { approx: f64, exact: f64 },

    #[error("alpha levels must be strictly increasing within [0, 1]")]
    BadAlphaGrid,

    #[error("at least one coarsening factor is required")]
    NoCoarseningFactors,

    #[error("at least one seed is required")]
    NoSeeds,
}

pub type Result<T> = std::result::Result<T, Error>;
