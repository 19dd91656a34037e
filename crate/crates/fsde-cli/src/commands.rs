//! Command bodies: resolve inputs, run the library, write the data file,
//! and print a one-line summary to stdout.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use fsde::analysis::{self, convergence_study, default_alpha_grid};
use fsde::models::{exact_gbm, CornerSide, ModelKind, SdeModel};
use fsde::output;
use fsde::solvers::{
    bounds_to_fuzzy, euler_maruyama, fuzzy_euler_maruyama, vertex_envelope, FuzzyTrajectory,
    Trajectory, TrajectoryMeta,
};
use fsde::stochastic::{derive_seed, grid_steps, BrownianPath};

use crate::{
    config, AlphaSweepArgs, ConvergeArgs, EnvelopeArgs, Format, FuzzySolveArgs, GridOpts,
    OutputOpts, PathsArgs, SolveArgs,
};

fn make_path(grid: &GridOpts, seed: u64) -> Result<BrownianPath> {
    let dt = grid.dt();
    let n = grid_steps(grid.t0, grid.t_end, dt)?;
    Ok(BrownianPath::generate(grid.t0, dt, n, seed)?)
}

fn write_output(out: &Path, content: &str) -> Result<()> {
    fs::write(out, content).with_context(|| format!("cannot write output file '{}'", out.display()))
}

fn write_trajectory(opts: &OutputOpts, out: &Path, run: &Trajectory) -> Result<()> {
    let content = match opts.format {
        Format::Csv => output::trajectory_csv(run),
        Format::Json => output::trajectory_json(run),
    };
    write_output(out, &content)
}

fn write_fuzzy(opts: &OutputOpts, out: &Path, ft: &FuzzyTrajectory) -> Result<()> {
    let content = match opts.format {
        Format::Csv => output::fuzzy_csv(ft),
        Format::Json => output::fuzzy_json(ft),
    };
    write_output(out, &content)
}

fn kind_name(kind: ModelKind) -> &'static str {
    match kind {
        ModelKind::Gbm => "gbm",
        ModelKind::Langevin => "langevin",
    }
}

pub fn paths(args: &PathsArgs) -> Result<()> {
    let path = make_path(&args.grid, args.seed)?;
    let content = match args.output.format {
        Format::Csv => output::path_csv(&path),
        Format::Json => output::path_json(&path),
    };
    write_output(&args.output.out, &content)?;
    println!(
        "paths: {} increments on [{}, {}], dt = {}, seed = {}, W(T) = {:.6} -> {}",
        path.len(),
        path.t0(),
        path.horizon(),
        path.dt(),
        path.seed(),
        path.endpoint(),
        args.output.out.display()
    );
    Ok(())
}

pub fn solve(args: &SolveArgs) -> Result<()> {
    let model = config::resolve_crisp(&args.model)?;
    let path = make_path(&args.grid, args.seed)?;
    let run = euler_maruyama(&model, &path, args.coarsen)?;
    write_trajectory(&args.output, &args.output.out, &run)?;
    if let Some(exact_out) = &args.exact_out {
        let exact = exact_trajectory(&model, &path)?;
        write_trajectory(&args.output, exact_out, &exact)?;
    }
    println!(
        "solve: {} with dt = {} (R = {}), seed = {}, X(T) = {:.6} -> {}",
        run.meta.model,
        run.meta.dt,
        args.coarsen,
        args.seed,
        run.terminal_value(),
        args.output.out.display()
    );
    Ok(())
}

/// Closed-form solution on the fine grid of `path`, packed as a trajectory.
fn exact_trajectory(model: &SdeModel, path: &BrownianPath) -> Result<Trajectory> {
    let SdeModel::Gbm(p) = model else {
        bail!("--exact-out: the closed form is only written for --model gbm");
    };
    let (times, values) = exact_gbm(p, path)?.into_iter().unzip();
    Ok(Trajectory {
        times,
        values,
        meta: TrajectoryMeta {
            seed: path.seed(),
            dt: path.dt(),
            coarsen_factor: 1,
            model: format!("exact {}", model.describe()),
        },
    })
}

pub fn fuzzy_solve(args: &FuzzySolveArgs) -> Result<()> {
    let common = &args.common;
    let params = config::resolve_fuzzy(&common.model)?;
    let path = make_path(&common.grid, common.seed)?;
    let ft = fuzzy_euler_maruyama(&params, &path, common.coarsen, common.alpha)?;
    write_fuzzy(&common.output, &common.output.out, &ft)?;
    if let Some(exact_out) = &args.exact_out {
        if params.kind != ModelKind::Gbm {
            bail!("--exact-out: the closed form is only written for --model gbm");
        }
        let corner = |side: CornerSide| -> Result<Vec<(f64, f64)>> {
            let SdeModel::Gbm(p) = params.corner_model(common.alpha, side)? else {
                unreachable!("model kind was checked above");
            };
            Ok(exact_gbm(&p, &path)?)
        };
        let (times, lower): (Vec<f64>, Vec<f64>) = corner(CornerSide::Lower)?.into_iter().unzip();
        let upper = corner(CornerSide::Upper)?
            .into_iter()
            .map(|(_, x)| x)
            .collect();
        let exact = bounds_to_fuzzy(times, lower, upper, common.alpha);
        write_fuzzy(&common.output, exact_out, &exact)?;
    }
    let (lo, hi) = ft.terminal_bounds();
    println!(
        "fuzzy-solve: {} at alpha = {}, X(T) in [{:.6}, {:.6}], {} crossing(s), seed = {} -> {}",
        kind_name(params.kind),
        common.alpha,
        lo,
        hi,
        ft.crossings.len(),
        common.seed,
        common.output.out.display()
    );
    Ok(())
}

pub fn envelope(args: &EnvelopeArgs) -> Result<()> {
    let common = &args.common;
    let params = config::resolve_fuzzy(&common.model)?;
    let path = make_path(&common.grid, common.seed)?;
    let ft = vertex_envelope(&params, &path, common.coarsen, common.alpha)?;
    write_fuzzy(&common.output, &common.output.out, &ft)?;
    let (lo, hi) = ft.terminal_bounds();
    println!(
        "envelope: {} at alpha = {}, X(T) in [{:.6}, {:.6}], seed = {} -> {}",
        kind_name(params.kind),
        common.alpha,
        lo,
        hi,
        common.seed,
        args.common.output.out.display()
    );
    Ok(())
}

pub fn converge(args: &ConvergeArgs) -> Result<()> {
    let model = config::resolve_crisp(&args.model)?;
    let SdeModel::Gbm(p) = model else {
        bail!("converge compares against the closed form, which is only available for --model gbm");
    };
    if args.grid.t0 != 0.0 {
        bail!("converge requires --t0 0: closed-form comparisons start at time zero");
    }
    if args.seeds == 0 {
        bail!("--seeds must be at least 1");
    }
    let seeds: Vec<u64> = (0..args.seeds as u64)
        .map(|k| derive_seed(args.seed, k))
        .collect();
    let report = convergence_study(&p, args.grid.t_end, args.grid.dt(), &args.coarsen, &seeds)?;
    let content = match args.output.format {
        Format::Csv => output::convergence_csv(&report),
        Format::Json => output::convergence_json(&report),
    };
    write_output(&args.output.out, &content)?;
    let slope = report
        .log_log_slope()
        .map(|s| format!("{s:.4}"))
        .unwrap_or_else(|| "n/a".into());
    println!(
        "converge: {} over {} path(s), R = {:?}, log-log slope = {} -> {}",
        report.model,
        report.num_paths,
        args.coarsen,
        slope,
        args.output.out.display()
    );
    Ok(())
}

pub fn alpha_sweep(args: &AlphaSweepArgs) -> Result<()> {
    let params = config::resolve_fuzzy(&args.model)?;
    let path = make_path(&args.grid, args.seed)?;
    let alphas = args.alphas.clone().unwrap_or_else(default_alpha_grid);
    let sweep = analysis::alpha_sweep(&params, &path, args.coarsen, &alphas)?;
    let content = match args.output.format {
        Format::Csv => output::alpha_sweep_csv(&sweep),
        Format::Json => output::alpha_sweep_json(&sweep),
    };
    write_output(&args.output.out, &content)?;
    println!(
        "alpha-sweep: {} over {} level(s), T = {}, seed = {} -> {}",
        kind_name(params.kind),
        sweep.rows.len(),
        sweep.t_end,
        args.seed,
        args.output.out.display()
    );
    Ok(())
}
