//! Simulated annealing over point configurations, maximizing the arc
//! count under the best possible radius assignment.
//!
//! The inner maximization over radii is solved exactly at every step by
//! the mode oracle ([`crate::digraph::optimal_radii`]), so the search
//! walks point positions only. Because arcs fire on exact distance
//! coincidences, plain Gaussian jitter almost never *creates* new
//! coincidences at tight tolerances — it can only preserve loose ones. The
//! proposal mix therefore alternates diffusive Gaussian moves with two
//! snap moves that place a point at an exact coincidence: onto a sphere
//! through an existing distance, or onto the locus equidistant from two
//! points at exactly their mutual distance (an equilateral completion).
//! Snap moves are what let the n = 3 search find the equilateral triangle
//! and its complete digraph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::{optimal_radii, DigraphError, PointSet3, DEFAULT_TOL};
use crate::suspension::{build_extremal, SuspensionError};
use crate::vec3::Vec3;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search needs n >= 3, got {0}")]
    TooFewPoints(usize),
    #[error("iterations and restarts must be >= 1")]
    EmptyBudget,
    #[error("step scale must be positive, got {0}")]
    InvalidStepScale(f64),
    #[error("initial temperature must be positive, got {0}")]
    InvalidTemperature(f64),
    #[error("decay must lie strictly between 0 and 1, got {0}")]
    InvalidDecay(f64),
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("init mode {0:?} needs n >= 13 to build its suspension")]
    InitNeedsConstruction(InitMode),
    #[error(transparent)]
    Suspension(#[from] SuspensionError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// How a restart's starting configuration is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InitMode {
    /// Uniform in the unit ball.
    Random,
    /// The square construction (needs n >= 13).
    Suspension,
    /// The square construction with small Gaussian noise (needs n >= 13).
    PerturbedSuspension,
}

/// Full description of a search run; equal configs give bit-identical
/// results regardless of how restarts are scheduled.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub iterations: u32,
    pub restarts: u32,
    pub seed: u64,
    pub init: InitMode,
    /// Gaussian step size as a fraction of the initial configuration
    /// diameter (further scaled by the current temperature).
    pub step_scale: f64,
    pub t0: f64,
    pub decay: f64,
    pub tol: f64,
}

impl SearchConfig {
    pub fn new(n: usize) -> SearchConfig {
        SearchConfig {
            n,
            iterations: 2000,
            restarts: 4,
            seed: 0,
            init: InitMode::Random,
            step_scale: 0.1,
            t0: 1.0,
            decay: 0.999,
            tol: DEFAULT_TOL,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.n < 3 {
            return Err(SearchError::TooFewPoints(self.n));
        }
        if self.iterations < 1 || self.restarts < 1 {
            return Err(SearchError::EmptyBudget);
        }
        if self.step_scale <= 0.0 || !self.step_scale.is_finite() {
            return Err(SearchError::InvalidStepScale(self.step_scale));
        }
        if self.t0 <= 0.0 || !self.t0.is_finite() {
            return Err(SearchError::InvalidTemperature(self.t0));
        }
        if !(self.decay > 0.0 && self.decay < 1.0) {
            return Err(SearchError::InvalidDecay(self.decay));
        }
        if self.tol <= 0.0 || !self.tol.is_finite() {
            return Err(SearchError::InvalidTolerance(self.tol));
        }
        if self.n < 13 && self.init != InitMode::Random {
            return Err(SearchError::InitNeedsConstruction(self.init));
        }
        Ok(())
    }
}

/// One scramble round of splitmix64: derives statistically independent
/// per-task seeds from (base seed, task index).
pub(crate) fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add((index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Standard normal via Box–Muller.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn random_unit(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(gaussian(rng), gaussian(rng), gaussian(rng));
        if let Some(u) = v.try_normalize() {
            return u;
        }
    }
}

fn uniform_ball(rng: &mut ChaCha8Rng) -> Vec3 {
    let r = rng.gen::<f64>().cbrt();
    random_unit(rng) * r
}

fn diameter(points: &[Vec3]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            d = d.max(points[i].dist(points[j]));
        }
    }
    d
}

/// Picks an index different from each of `avoid`.
fn distinct_index(rng: &mut ChaCha8Rng, n: usize, avoid: &[usize]) -> usize {
    loop {
        let k = rng.gen_range(0..n);
        if !avoid.contains(&k) {
            return k;
        }
    }
}

struct RestartOutcome {
    points: Vec<Vec3>,
    radii: Vec<f64>,
    e_value: u64,
}

fn run_restart(cfg: &SearchConfig, restart: u32) -> Result<RestartOutcome, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(cfg.seed, u64::from(restart)));
    let mut points: Vec<Vec3> = match cfg.init {
        InitMode::Random => (0..cfg.n).map(|_| uniform_ball(&mut rng)).collect(),
        InitMode::Suspension => build_extremal(cfg.n)?.points,
        InitMode::PerturbedSuspension => build_extremal(cfg.n)?
            .points
            .into_iter()
            .map(|p| {
                p + Vec3::new(gaussian(&mut rng), gaussian(&mut rng), gaussian(&mut rng)) * 0.01
            })
            .collect(),
    };
    let scale = cfg.step_scale * diameter(&points).max(f64::MIN_POSITIVE);

    let (mut radii, mut e_value) = optimal_radii(&points, cfg.tol)?;
    let mut best = RestartOutcome { points: points.clone(), radii: radii.clone(), e_value };

    let mut temperature = cfg.t0;
    for _ in 0..cfg.iterations {
        let v = rng.gen_range(0..cfg.n);
        let move_kind: f64 = rng.gen();
        let candidate = if move_kind < 0.5 {
            // Diffusive move, shrinking with the temperature.
            let sigma = scale * temperature;
            points[v]
                + Vec3::new(gaussian(&mut rng), gaussian(&mut rng), gaussian(&mut rng)) * sigma
        } else if move_kind < 0.75 {
            // Sphere snap: make d(a, v) exactly equal d(a, u), keeping
            // v's direction from a.
            let a = distinct_index(&mut rng, cfg.n, &[v]);
            let u = distinct_index(&mut rng, cfg.n, &[v, a]);
            match (points[v] - points[a]).try_normalize() {
                Some(dir) => points[a] + dir * points[a].dist(points[u]),
                None => continue,
            }
        } else {
            // Equilateral snap: place v at exactly d(a, b) from both a
            // and b, at a random angle around their midline.
            let a = distinct_index(&mut rng, cfg.n, &[v]);
            let b = distinct_index(&mut rng, cfg.n, &[v, a]);
            let side = points[a].dist(points[b]);
            let axis = match (points[b] - points[a]).try_normalize() {
                Some(dir) => dir,
                None => continue,
            };
            let u = axis.any_perpendicular();
            let w = axis.cross(u);
            let phi = rng.gen::<f64>() * std::f64::consts::TAU;
            let mid = (points[a] + points[b]) * 0.5;
            let height = side * 3f64.sqrt() / 2.0;
            mid + (u * phi.cos() + w * phi.sin()) * height
        };
        temperature *= cfg.decay;

        // Skip proposals that collapse two points onto each other; the
        // digraph is undefined there.
        if (0..cfg.n).any(|k| k != v && points[k].dist(candidate) <= cfg.tol) {
            continue;
        }
        let old = std::mem::replace(&mut points[v], candidate);
        let (new_radii, new_e) = optimal_radii(&points, cfg.tol)?;
        let accept = new_e >= e_value || {
            let delta = new_e as f64 - e_value as f64;
            rng.gen::<f64>() < (delta / temperature).exp()
        };
        if accept {
            radii = new_radii;
            e_value = new_e;
            if e_value > best.e_value {
                best = RestartOutcome { points: points.clone(), radii: radii.clone(), e_value };
            }
        } else {
            points[v] = old;
        }
    }
    Ok(best)
}

/// Runs the annealing search and returns the best configuration found
/// (with its mode-optimal radii) and its arc count.
///
/// Restarts run in parallel on seeds derived from `cfg.seed`; the best
/// arc count wins, ties broken by the lowest restart index, so results
/// are bit-identical for equal configs no matter the thread schedule.
pub fn local_search(cfg: &SearchConfig) -> Result<(PointSet3, u64), SearchError> {
    cfg.validate()?;
    let outcomes: Vec<RestartOutcome> =
        (0..cfg.restarts).into_par_iter().map(|r| run_restart(cfg, r)).collect::<Result<_, _>>()?;
    let best = outcomes
        .into_iter()
        .reduce(|acc, o| if o.e_value > acc.e_value { o } else { acc })
        .expect("restarts >= 1");
    let ps = PointSet3::new(best.points, best.radii)?;
    Ok((ps, best.e_value))
}
