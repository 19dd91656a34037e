//! Seeded Brownian paths on uniform grids and exact integer-factor coarsening.
//!
//! A path over `[t0, t0 + n * dt]` stores its `n` increments
//! `dW_i = z_i * sqrt(dt)` with `z_i` standard normal. Coarsening by an
//! integer factor `R` replaces each group of `R` consecutive fine increments
//! by their sum, so the coarse path visits exactly the same Brownian values
//! on the subsampled grid; this is what lets one fine realisation drive
//! solver runs at several step sizes.
//!
//! Randomness is frozen so a seed means the same path everywhere:
//!
//! * generator: ChaCha12 (`rand_chacha`), seeded via `seed_from_u64`;
//! * uniforms: the top 53 bits of each `u64` output;
//! * normals: the Box-Muller transform, pairs `(r cos a, r sin a)` with
//!   `r = sqrt(-2 ln u1)`, `a = 2 pi u2`, consumed cosine branch first.
//!
//! Changing any of these is a breaking change: seeded outputs are part of
//! the interface. (`sin`/`cos`/`ln` come from the platform libm, which may
//! differ in the last ulp across C libraries; within one toolchain the
//! byte-for-byte reproducibility of emitted files is guaranteed.)
//!
//! Summation orders are part of the contract too. Coarse increments are
//! plain left-to-right sums of their fine group. Cumulative values and the
//! terminal `W` accumulate left to right with Neumaier compensation, which
//! keeps every prefix within an ulp of the true sum; fine and coarse
//! terminal values of the same realisation therefore agree to well under
//! 1e-15 even though the coarse increments each carry their own rounding.

use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

const TWO_POW_53: f64 = 9007199254740992.0;

/// Left-to-right sum with Neumaier's compensated correction term.
#[derive(Debug, Clone, Copy, Default)]
struct CompensatedSum {
    sum: f64,
    c: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.c
    }
}

/// Stream of standard-normal variates with a frozen algorithm (ChaCha12
/// uniforms through Box-Muller). Identical seeds yield identical streams.
#[derive(Debug, Clone)]
pub struct NormalSampler {
    rng: ChaCha12Rng,
    spare: Option<f64>,
}

impl NormalSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha12Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    /// Uniform draw on (0, 1]; never zero, so its logarithm is finite.
    fn unit_open(&mut self) -> f64 {
        (((self.rng.next_u64() >> 11) + 1) as f64) / TWO_POW_53
    }

    /// Uniform draw on [0, 1).
    fn unit_half_open(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64) / TWO_POW_53
    }

    /// Next standard-normal variate.
    pub fn next_standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.unit_open();
        let u2 = self.unit_half_open();
        let r = (-2.0 * u1.ln()).sqrt();
        let a = std::f64::consts::TAU * u2;
        self.spare = Some(r * a.sin());
        r * a.cos()
    }
}

/// Seed for member `index` of an ensemble driven by `master`.
///
/// SplitMix64-style finalizer over the two words; fixed for all time so that
/// ensemble runs are reproducible from a single master seed. Distinct
/// indices always map to distinct seeds for a given master.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Number of steps of size `dt` from `t0` to `t_end`, which must divide the
/// horizon to within rounding.
pub fn grid_steps(t0: f64, t_end: f64, dt: f64) -> Result<usize> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::NonpositiveStep(dt));
    }
    if !(t_end > t0) {
        return Err(Error::EmptyHorizon { t0, t_end });
    }
    let raw = (t_end - t0) / dt;
    let n = raw.round();
    if n < 1.0 || (raw - n).abs() > 1e-9 * n.max(1.0) {
        return Err(Error::GridMismatch { t0, t_end, dt });
    }
    Ok(n as usize)
}

/// Brownian path sampled as increments on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BrownianPath {
    t0: f64,
    dt: f64,
    increments: Vec<f64>,
    seed: u64,
}

impl BrownianPath {
    /// Samples `n` increments of size `dt` starting at `t0` from the seeded
    /// normal stream. The same `(seed, dt, n)` triple always reproduces the
    /// same increments bit for bit.
    pub fn generate(t0: f64, dt: f64, n: usize, seed: u64) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::NonpositiveStep(dt));
        }
        if n == 0 {
            return Err(Error::EmptyPath);
        }
        let sqrt_dt = dt.sqrt();
        let mut sampler = NormalSampler::new(seed);
        let increments = (0..n)
            .map(|_| sampler.next_standard_normal() * sqrt_dt)
            .collect();
        Ok(Self {
            t0,
            dt,
            increments,
            seed,
        })
    }

    /// Wraps explicit increments; `seed` is carried as provenance only.
    pub fn from_increments(t0: f64, dt: f64, increments: Vec<f64>, seed: u64) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::NonpositiveStep(dt));
        }
        if increments.is_empty() {
            return Err(Error::EmptyPath);
        }
        Ok(Self {
            t0,
            dt,
            increments,
            seed,
        })
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.increments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.increments.is_empty()
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    /// Grid time of index `k`, computed by index multiplication so that
    /// repeated addition cannot drift.
    pub fn time(&self, k: usize) -> f64 {
        self.t0 + k as f64 * self.dt
    }

    /// Final grid time `t0 + n * dt`.
    pub fn horizon(&self) -> f64 {
        self.time(self.len())
    }

    /// Terminal Brownian value `W(t_n)`: the compensated left-to-right sum
    /// of all increments.
    pub fn endpoint(&self) -> f64 {
        let mut acc = CompensatedSum::default();
        for &dw in &self.increments {
            acc.add(dw);
        }
        acc.value()
    }

    /// Path with every group of `factor` consecutive increments replaced by
    /// its left-to-right sum and `dt` scaled by `factor`. The factor must
    /// divide the increment count exactly.
    pub fn coarsen(&self, factor: usize) -> Result<Self> {
        if factor == 0 {
            return Err(Error::ZeroCoarseningFactor);
        }
        if !self.increments.len().is_multiple_of(factor) {
            return Err(Error::IndivisibleCoarsening {
                factor,
                len: self.increments.len(),
            });
        }
        let increments = self
            .increments
            .chunks_exact(factor)
            .map(|group| group.iter().sum())
            .collect();
        Ok(Self {
            t0: self.t0,
            dt: factor as f64 * self.dt,
            increments,
            seed: self.seed,
        })
    }

    /// Sampled Brownian values `(t_k, W(t_k))` for `k = 0..=n`, starting at
    /// `W(t0) = 0`, accumulated as compensated left-to-right prefix sums.
    pub fn cumulative(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push((self.t0, 0.0));
        let mut acc = CompensatedSum::default();
        for (i, dw) in self.increments.iter().enumerate() {
            acc.add(*dw);
            out.push((self.time(i + 1), acc.value()));
        }
        out
    }
}
