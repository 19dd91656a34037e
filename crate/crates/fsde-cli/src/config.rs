//! Model parameter resolution from flags and plain-text config files.
//!
//! Coefficients accept either a single number (crisp) or a comma triple
//! `l,peak,r` (triangular fuzzy). A config file holds `key = value` lines
//! for the keys `model`, `mu`, `sigma`, `x0`; blank lines and lines
//! starting with `#` are ignored, and command-line flags override the
//! file.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use fsde::models::{FuzzyModelParams, GbmParams, LangevinParams, ModelKind, SdeModel};
use fsde::TriangularFuzzyNumber;

use crate::{KindArg, ModelOpts};

/// Parses a coefficient: `"0.75"` is crisp, `"0.65,0.75,0.85"` is fuzzy.
pub fn parse_tfn(text: &str) -> Result<TriangularFuzzyNumber> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let number = |s: &str| -> Result<f64> {
        s.parse::<f64>()
            .map_err(|_| anyhow!("'{s}' is not a number"))
    };
    match parts.as_slice() {
        [v] => Ok(TriangularFuzzyNumber::crisp(number(v)?)?),
        [l, m, r] => Ok(TriangularFuzzyNumber::new(
            number(l)?,
            number(m)?,
            number(r)?,
        )?),
        _ => bail!("expected a number or a triple 'l,peak,r', got '{text}'"),
    }
}

#[derive(Default)]
struct ConfigValues {
    model: Option<KindArg>,
    mu: Option<String>,
    sigma: Option<String>,
    x0: Option<String>,
}

fn load_config(path: &Path) -> Result<ConfigValues> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read config file '{}'", path.display()))?;
    let mut values = ConfigValues::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("config line {}: expected 'key = value'", lineno + 1))?;
        let value = value.trim().to_string();
        match key.trim() {
            "model" => {
                values.model = Some(match value.as_str() {
                    "gbm" => KindArg::Gbm,
                    "langevin" => KindArg::Langevin,
                    other => bail!("config line {}: unknown model '{other}'", lineno + 1),
                })
            }
            "mu" => values.mu = Some(value),
            "sigma" => values.sigma = Some(value),
            "x0" => values.x0 = Some(value),
            other => bail!("config line {}: unknown key '{other}'", lineno + 1),
        }
    }
    Ok(values)
}

/// Fuzzy coefficients resolved from flags and config, flags first. `mu`
/// and `sigma` are required; `x0` defaults to the crisp value 1.
pub fn resolve_fuzzy(opts: &ModelOpts) -> Result<FuzzyModelParams> {
    let file = match &opts.config {
        Some(path) => load_config(path)?,
        None => ConfigValues::default(),
    };
    let kind = match opts.model.or(file.model) {
        Some(KindArg::Gbm) => ModelKind::Gbm,
        Some(KindArg::Langevin) => ModelKind::Langevin,
        None => bail!("no model selected; pass --model or set it in the config"),
    };
    let coefficient = |flag: &Option<String>,
                       from_file: &Option<String>,
                       name: &str|
     -> Result<TriangularFuzzyNumber> {
        let text = flag
            .as_ref()
            .or(from_file.as_ref())
            .ok_or_else(|| anyhow!("missing coefficient: pass --{name} or set it in the config"))?;
        parse_tfn(text).with_context(|| format!("--{name}"))
    };
    let mu = coefficient(&opts.mu, &file.mu, "mu")?;
    let sigma = coefficient(&opts.sigma, &file.sigma, "sigma")?;
    let x0 = match (&opts.x0, &file.x0) {
        (None, None) => TriangularFuzzyNumber::crisp(1.0)?,
        (flag, from_file) => coefficient(flag, from_file, "x0")?,
    };
    Ok(FuzzyModelParams::new(kind, mu, sigma, x0)?)
}

/// Crisp model resolved from flags and config; rejects fuzzy triples.
pub fn resolve_crisp(opts: &ModelOpts) -> Result<SdeModel> {
    let params = resolve_fuzzy(opts)?;
    let scalar = |f: TriangularFuzzyNumber, name: &str| -> Result<f64> {
        if f.is_crisp() {
            Ok(f.peak())
        } else {
            bail!("--{name}: this command needs a single number, not a fuzzy triple")
        }
    };
    let mu = scalar(params.mu, "mu")?;
    let sigma = scalar(params.sigma, "sigma")?;
    let x0 = scalar(params.x0, "x0")?;
    Ok(match params.kind {
        ModelKind::Gbm => SdeModel::gbm(GbmParams { mu, sigma, x0 }),
        ModelKind::Langevin => SdeModel::langevin(LangevinParams { mu, sigma, x0 })?,
    })
}
