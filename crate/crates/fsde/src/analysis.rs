//! Error measurement, step-size convergence studies, and band diagnostics.
//!
//! The convergence study drives Euler-Maruyama at several coarsening
//! factors of one fine Brownian grid and compares terminal values against
//! the closed-form geometric Brownian motion on the same realisation. With
//! the increments shared this way the observed endpoint error shrinks like
//! `dt^0.5` (strong order one half), which the log-log slope of the report
//! makes visible.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{exact_gbm, FuzzyModelParams, GbmParams, SdeModel};
use crate::solvers::{euler_maruyama, fuzzy_euler_maruyama, FuzzyTrajectory, Trajectory};
use crate::stochastic::{grid_steps, BrownianPath};

/// Absolute difference of terminal values between a solver run and a
/// reference solution sampled as `(t, x)` pairs. The two curves must end
/// at the same time (up to rounding of the grid arithmetic).
pub fn endpoint_error(approx: &Trajectory, exact: &[(f64, f64)]) -> Result<f64> {
    let (t_exact, x_exact) = *exact.last().ok_or(Error::EmptyExactSolution)?;
    let t_approx = approx.terminal_time();
    if (t_approx - t_exact).abs() > 1e-9 * t_approx.abs().max(1.0) {
        return Err(Error::HorizonMismatch {
            approx: t_approx,
            exact: t_exact,
        });
    }
    Ok((approx.terminal_value() - x_exact).abs())
}

/// Mean endpoint error at one step size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceEntry {
    /// Coarsening factor applied to the fine grid.
    #[serde(rename = "r")]
    pub coarsen_factor: usize,
    /// Resulting step size (factor times the fine step).
    pub dt: f64,
    /// Mean absolute terminal error over the ensemble.
    pub endpoint_error: f64,
}

/// Endpoint errors per step size for one model over one seed ensemble,
/// sorted by decreasing step size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub model: String,
    /// Ensemble size (1 reproduces a single-realisation experiment).
    pub num_paths: usize,
    pub entries: Vec<ConvergenceEntry>,
}

impl ConvergenceReport {
    /// Least-squares slope of `ln(error)` against `ln(dt)`; `None` with
    /// fewer than two entries or a vanishing error. Near 0.5 for
    /// Euler-Maruyama on geometric Brownian motion.
    pub fn log_log_slope(&self) -> Option<f64> {
        if self.entries.len() < 2 || self.entries.iter().any(|e| e.endpoint_error <= 0.0) {
            return None;
        }
        let pts: Vec<(f64, f64)> = self
            .entries
            .iter()
            .map(|e| (e.dt.ln(), e.endpoint_error.ln()))
            .collect();
        let n = pts.len() as f64;
        let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
        let sxy: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
        (sxx > 0.0).then(|| sxy / sxx)
    }
}

/// Compensated (Kahan) sum, so ensemble means do not depend on how the
/// per-seed loop was scheduled.
fn kahan_mean(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for &v in values {
        let y = v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum / values.len() as f64
}

/// Mean endpoint error of Euler-Maruyama against the closed-form
/// geometric Brownian motion, per coarsening factor, over an ensemble of
/// seeded fine paths on `[0, t_end]`.
///
/// Every seed generates one fine path with step `fine_dt`; each factor in
/// `factors` must divide the fine step count. Per-seed work is independent
/// and runs in parallel; results do not depend on scheduling because the
/// per-seed errors are collected in seed order and averaged with
/// compensated summation.
pub fn convergence_study(
    params: &GbmParams,
    t_end: f64,
    fine_dt: f64,
    factors: &[usize],
    seeds: &[u64],
) -> Result<ConvergenceReport> {
    if factors.is_empty() {
        return Err(Error::NoCoarseningFactors);
    }
    if seeds.is_empty() {
        return Err(Error::NoSeeds);
    }
    let n = grid_steps(0.0, t_end, fine_dt)?;
    for &factor in factors {
        if factor == 0 {
            return Err(Error::ZeroCoarseningFactor);
        }
        if !n.is_multiple_of(factor) {
            return Err(Error::IndivisibleCoarsening { factor, len: n });
        }
    }
    let model = SdeModel::gbm(*params);
    let per_seed: Vec<Vec<f64>> = seeds
        .par_iter()
        .map(|&seed| -> Result<Vec<f64>> {
            let path = BrownianPath::generate(0.0, fine_dt, n, seed)?;
            let exact = exact_gbm(params, &path)?;
            factors
                .iter()
                .map(|&factor| endpoint_error(&euler_maruyama(&model, &path, factor)?, &exact))
                .collect()
        })
        .collect::<Result<_>>()?;

    let mut entries: Vec<ConvergenceEntry> = factors
        .iter()
        .enumerate()
        .map(|(j, &factor)| {
            let errors: Vec<f64> = per_seed.iter().map(|row| row[j]).collect();
            ConvergenceEntry {
                coarsen_factor: factor,
                dt: factor as f64 * fine_dt,
                endpoint_error: kahan_mean(&errors),
            }
        })
        .collect();
    entries.sort_by(|a, b| b.dt.total_cmp(&a.dt));
    Ok(ConvergenceReport {
        model: model.describe(),
        num_paths: seeds.len(),
        entries,
    })
}

/// Signed band width `upper - lower` at every grid point; negative wherever
/// the bound runs crossed.
pub fn band_width(ft: &FuzzyTrajectory) -> Vec<(f64, f64)> {
    ft.times
        .iter()
        .zip(ft.lower.iter().zip(&ft.upper))
        .map(|(&t, (&lo, &up))| (t, up - lo))
        .collect()
}

/// Crossing statistics of a fuzzy run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossingReport {
    pub count: usize,
    /// Crossings divided by the number of time steps.
    pub fraction: f64,
}

pub fn crossing_report(ft: &FuzzyTrajectory) -> CrossingReport {
    let steps = ft.steps();
    let count = ft.crossings.len();
    CrossingReport {
        count,
        fraction: if steps == 0 {
            0.0
        } else {
            count as f64 / steps as f64
        },
    }
}

/// Terminal bounds at one membership level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaRow {
    pub alpha: f64,
    pub lower_t: f64,
    pub upper_t: f64,
}

/// Terminal bound pairs over a grid of membership levels at a fixed end
/// time: the data for a fuzzy plot of the solution at the horizon.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaSweep {
    /// Common end time of all rows.
    pub t_end: f64,
    pub rows: Vec<AlphaRow>,
}

/// The conventional 11-level grid 0, 0.1, ..., 1.
pub fn default_alpha_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

/// Runs the two-corner fuzzy solve once per level of `alphas` (which must
/// be strictly increasing within [0, 1]) and records the terminal bounds.
/// All levels share the same path and coarsening, so rows differ only in
/// membership level.
pub fn alpha_sweep(
    params: &FuzzyModelParams,
    path: &BrownianPath,
    factor: usize,
    alphas: &[f64],
) -> Result<AlphaSweep> {
    if alphas.is_empty() || alphas.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::BadAlphaGrid);
    }
    let rows = alphas
        .iter()
        .map(|&alpha| -> Result<AlphaRow> {
            let ft = fuzzy_euler_maruyama(params, path, factor, alpha)?;
            let (lower_t, upper_t) = ft.terminal_bounds();
            Ok(AlphaRow {
                alpha,
                lower_t,
                upper_t,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlphaSweep {
        t_end: path.coarsen(factor)?.horizon(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::TriangularFuzzyNumber;
    use crate::models::ModelKind;
    use crate::solvers::bounds_to_fuzzy;

    fn tfn(l: f64, m: f64, r: f64) -> TriangularFuzzyNumber {
        TriangularFuzzyNumber::new(l, m, r).unwrap()
    }

    #[test]
    fn endpoint_error_is_absolute_terminal_difference() {
        let path = BrownianPath::generate(0.0, 0.25, 4, 1).unwrap();
        let p = GbmParams {
            mu: 0.75,
            sigma: 0.0,
            x0: 1.0,
        };
        let run = euler_maruyama(&SdeModel::gbm(p), &path, 1).unwrap();
        let exact = exact_gbm(&p, &path).unwrap();
        let err = endpoint_error(&run, &exact).unwrap();
        let expected = (1.1875f64.powi(4) - 0.75f64.exp()).abs();
        assert_eq!(err, expected);
    }

    #[test]
    fn endpoint_error_rejects_mismatched_horizons() {
        let path = BrownianPath::generate(0.0, 0.25, 4, 1).unwrap();
        let short = BrownianPath::generate(0.0, 0.25, 2, 1).unwrap();
        let p = GbmParams {
            mu: 0.75,
            sigma: 0.3,
            x0: 1.0,
        };
        let run = euler_maruyama(&SdeModel::gbm(p), &short, 1).unwrap();
        let exact = exact_gbm(&p, &path).unwrap();
        assert!(matches!(
            endpoint_error(&run, &exact),
            Err(Error::HorizonMismatch { .. })
        ));
        assert!(matches!(
            endpoint_error(&run, &[]),
            Err(Error::EmptyExactSolution)
        ));
    }

    #[test]
    fn convergence_entries_are_sorted_by_decreasing_step() {
        let p = GbmParams {
            mu: 0.75,
            sigma: 0.3,
            x0: 1.0,
        };
        let report = convergence_study(&p, 1.0, 2f64.powi(-8), &[2, 8, 4], &[1, 2, 3]).unwrap();
        let dts: Vec<f64> = report.entries.iter().map(|e| e.dt).collect();
        assert_eq!(dts, vec![8.0 / 256.0, 4.0 / 256.0, 2.0 / 256.0]);
        assert!(report.entries.iter().all(|e| e.endpoint_error >= 0.0));
        assert_eq!(report.num_paths, 3);
    }

    #[test]
    fn convergence_study_validates_inputs() {
        let p = GbmParams {
            mu: 0.75,
            sigma: 0.3,
            x0: 1.0,
        };
        assert!(convergence_study(&p, 1.0, 2f64.powi(-8), &[], &[1]).is_err());
        assert!(convergence_study(&p, 1.0, 2f64.powi(-8), &[2], &[]).is_err());
        assert!(convergence_study(&p, 1.0, 2f64.powi(-8), &[3], &[1]).is_err());
        assert!(convergence_study(&p, 1.0, 0.3, &[2], &[1]).is_err());
    }

    #[test]
    fn slope_of_an_exact_half_order_series_is_half() {
        let entries = [(8usize, 0.04f64), (4, 0.04 / 2f64.sqrt()), (2, 0.02)];
        let report = ConvergenceReport {
            model: "synthetic".into(),
            num_paths: 1,
            entries: entries
                .iter()
                .map(|&(factor, err)| ConvergenceEntry {
                    coarsen_factor: factor,
                    dt: factor as f64 / 256.0,
                    endpoint_error: err,
                })
                .collect(),
        };
        let slope = report.log_log_slope().unwrap();
        assert!((slope - 0.5).abs() < 1e-12, "slope {slope}");
    }

    #[test]
    fn band_width_is_signed() {
        let ft = bounds_to_fuzzy(vec![0.0, 0.01], vec![1.0, 0.895], vec![1.0, 0.805], 0.0);
        let widths = band_width(&ft);
        assert_eq!(widths[0], (0.0, 0.0));
        assert!((widths[1].1 - (-0.09)).abs() < 1e-12, "got {}", widths[1].1);
    }

    #[test]
    fn crossing_report_counts_flagged_steps() {
        let ft = bounds_to_fuzzy(vec![0.0, 0.01], vec![1.0, 0.895], vec![1.0, 0.805], 0.0);
        let report = crossing_report(&ft);
        assert_eq!(report.count, 1);
        assert_eq!(report.fraction, 1.0);

        let none = bounds_to_fuzzy(vec![0.0, 0.01], vec![1.0, 0.9], vec![1.0, 0.95], 1.0);
        assert_eq!(
            crossing_report(&none),
            CrossingReport {
                count: 0,
                fraction: 0.0
            }
        );
    }

    #[test]
    fn default_grid_has_eleven_increasing_levels() {
        let grid = default_alpha_grid();
        assert_eq!(grid.len(), 11);
        assert_eq!(grid[0], 0.0);
        assert_eq!(*grid.last().unwrap(), 1.0);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn alpha_sweep_rows_match_independent_corner_runs() {
        let params = FuzzyModelParams::new(
            ModelKind::Gbm,
            tfn(0.65, 0.75, 0.85),
            tfn(0.25, 0.30, 0.35),
            TriangularFuzzyNumber::crisp(1.0).unwrap(),
        )
        .unwrap();
        let path = BrownianPath::generate(0.0, 2f64.powi(-8), 256, 11).unwrap();
        let sweep = alpha_sweep(&params, &path, 4, &default_alpha_grid()).unwrap();
        assert_eq!(sweep.rows.len(), 11);
        assert_eq!(sweep.t_end, 1.0);
        for row in &sweep.rows {
            let ft = fuzzy_euler_maruyama(&params, &path, 4, row.alpha).unwrap();
            let (lo, hi) = ft.terminal_bounds();
            assert_eq!(row.lower_t, lo);
            assert_eq!(row.upper_t, hi);
        }
        // at full membership the bounds coincide
        let last = sweep.rows.last().unwrap();
        assert_eq!(last.alpha, 1.0);
        assert_eq!(last.lower_t, last.upper_t);
    }

    #[test]
    fn alpha_sweep_rejects_bad_grids() {
        let params = FuzzyModelParams::new(
            ModelKind::Gbm,
            tfn(0.65, 0.75, 0.85),
            tfn(0.25, 0.30, 0.35),
            TriangularFuzzyNumber::crisp(1.0).unwrap(),
        )
        .unwrap();
        let path = BrownianPath::generate(0.0, 2f64.powi(-8), 256, 11).unwrap();
        assert!(alpha_sweep(&params, &path, 4, &[]).is_err());
        assert!(alpha_sweep(&params, &path, 4, &[0.5, 0.5]).is_err());
        assert!(alpha_sweep(&params, &path, 4, &[0.5, 0.2]).is_err());
        assert!(alpha_sweep(&params, &path, 4, &[0.5, 1.2]).is_err());
    }
}
