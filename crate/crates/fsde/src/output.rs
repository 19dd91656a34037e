//! CSV and JSON rendering of paths, trajectories, and reports.
//!
//! Floats are written in scientific notation with 17 significant digits,
//! enough for `f64` values to survive a round trip through text unchanged;
//! emitting the same data twice therefore produces byte-identical files.
//! CSV files carry a header row and use `,` as delimiter and `.` as the
//! decimal separator. JSON documents mirror the report types with keys in
//! lower snake case.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::analysis::{AlphaSweep, ConvergenceReport};
use crate::solvers::{FuzzyTrajectory, Trajectory};
use crate::stochastic::BrownianPath;

/// `f64` rendered with 17 significant digits, the smallest count that is
/// always exactly recoverable by parsing.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Columns `t,W`: the sampled Brownian values of `path`.
pub fn path_csv(path: &BrownianPath) -> String {
    let mut out = String::from("t,W\n");
    for (t, w) in path.cumulative() {
        let _ = writeln!(out, "{},{}", format_float(t), format_float(w));
    }
    out
}

/// Grid descriptor plus the sampled `(t, w)` points of a path.
pub fn path_json(path: &BrownianPath) -> String {
    let points: Vec<_> = path
        .cumulative()
        .into_iter()
        .map(|(t, w)| json!({ "t": t, "w": w }))
        .collect();
    let doc = json!({
        "t0": path.t0(),
        "dt": path.dt(),
        "seed": path.seed(),
        "points": points,
    });
    pretty(&doc)
}

/// Columns `t,X`: one solver run.
pub fn trajectory_csv(tr: &Trajectory) -> String {
    let mut out = String::from("t,X\n");
    for (t, x) in tr.times.iter().zip(&tr.values) {
        let _ = writeln!(out, "{},{}", format_float(*t), format_float(*x));
    }
    out
}

pub fn trajectory_json(tr: &Trajectory) -> String {
    pretty(tr)
}

/// Columns `t,X_lower,X_upper,crossing`, the last one a 0/1 flag marking
/// indices where the lower run exceeded the upper.
pub fn fuzzy_csv(ft: &FuzzyTrajectory) -> String {
    let mut out = String::from("t,X_lower,X_upper,crossing\n");
    let mut flagged = ft.crossings.iter().peekable();
    for (i, t) in ft.times.iter().enumerate() {
        let crossing = if flagged.peek() == Some(&&i) {
            flagged.next();
            1
        } else {
            0
        };
        let _ = writeln!(
            out,
            "{},{},{},{}",
            format_float(*t),
            format_float(ft.lower[i]),
            format_float(ft.upper[i]),
            crossing
        );
    }
    out
}

pub fn fuzzy_json(ft: &FuzzyTrajectory) -> String {
    pretty(ft)
}

/// Columns `R,dt,endpoint_error`, one row per step size.
pub fn convergence_csv(report: &ConvergenceReport) -> String {
    let mut out = String::from("R,dt,endpoint_error\n");
    for e in &report.entries {
        let _ = writeln!(
            out,
            "{},{},{}",
            e.coarsen_factor,
            format_float(e.dt),
            format_float(e.endpoint_error)
        );
    }
    out
}

pub fn convergence_json(report: &ConvergenceReport) -> String {
    pretty(report)
}

/// Columns `alpha,lower_T,upper_T`, one row per membership level.
pub fn alpha_sweep_csv(sweep: &AlphaSweep) -> String {
    let mut out = String::from("alpha,lower_T,upper_T\n");
    for row in &sweep.rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            format_float(row.alpha),
            format_float(row.lower_t),
            format_float(row.upper_t)
        );
    }
    out
}

pub fn alpha_sweep_json(sweep: &AlphaSweep) -> String {
    pretty(sweep)
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut out =
        serde_json::to_string_pretty(value).expect("report types serialize without error");
    out.push('\n');
    out
}
