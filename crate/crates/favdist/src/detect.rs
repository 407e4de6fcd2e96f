//! Geometric recovery of suspension structure from a raw configuration.
//!
//! [`detect_suspension`] runs RANSAC over circle hypotheses: three random
//! points determine a circle and hence a candidate circle-plus-axis pair;
//! points are scored by incidence, with axis candidates additionally
//! required to carry a radius equal to their distance to the circle (the
//! defining constraint of a suspension, not mere geometry). The best
//! hypothesis partitions the points into circle members `C`, axis members
//! `L`, and leftovers `T`.
//!
//! [`stability_experiment`] damages a fraction of the extremal
//! construction and reports how the arc count and the recovered structure
//! degrade — an empirical echo of the stability theory: near-extremal
//! configurations are suspensions up to a bounded exceptional set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::{distance_matches, optimal_radii, DigraphError, PointSet3, DEFAULT_TOL};
use crate::search::derive_seed;
use crate::suspension::{build_extremal, Frame, SuspensionError};
use crate::vec3::Vec3;

#[derive(Debug, Error)]
pub enum DetectError {
    #[error("detection needs n >= 8 (smaller configurations cannot pin the circle), got {0}")]
    TooFewPoints(usize),
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("need at least 1 iteration")]
    EmptyBudget,
    #[error("every sampled triple was collinear after {0} attempts")]
    AllSamplesDegenerate(u32),
    #[error("stability experiment needs n >= 50, got {0}")]
    StabilityTooSmall(usize),
    #[error("damage fraction must lie in [0, 0.2], got {0}")]
    InvalidDamageFraction(f64),
    #[error(transparent)]
    Suspension(#[from] SuspensionError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// Partition of a configuration into circle, axis, and leftover points,
/// with the fitted frame.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetectionResult {
    pub frame: Frame,
    pub c_indices: Vec<usize>,
    pub l_indices: Vec<usize>,
    pub t_indices: Vec<usize>,
    /// Per-point distance to the circle-union-axis, for all points.
    pub residuals: Vec<f64>,
    /// Number of leftover points, `t_indices.len()`.
    pub t: usize,
}

enum Class {
    Circle,
    Line,
    Leftover,
}

fn classify(ps: &PointSet3, frame: &Frame, tol: f64, k: usize) -> (Class, f64) {
    let pos = frame.decompose(ps.points[k]);
    let tau = tol * frame.circle_radius.max(1.0);
    let residual = pos.circle_residual.min(pos.axis_residual);
    if pos.circle_residual <= tau {
        (Class::Circle, residual)
    } else if pos.axis_residual <= tau && distance_matches(pos.circle_residual, ps.radii[k], tol) {
        (Class::Line, residual)
    } else {
        (Class::Leftover, residual)
    }
}

fn sample_distinct(rng: &mut ChaCha8Rng, n: usize) -> [usize; 3] {
    let a = rng.gen_range(0..n);
    let b = loop {
        let k = rng.gen_range(0..n);
        if k != a {
            break k;
        }
    };
    let c = loop {
        let k = rng.gen_range(0..n);
        if k != a && k != b {
            break k;
        }
    };
    [a, b, c]
}

/// RANSAC detection of suspension structure.
///
/// Each iteration samples three distinct points, fits the circle through
/// them, and scores the induced partition by `|C| + |L|`; the best score
/// wins, ties broken by the lowest iteration index, so the result is
/// deterministic for a given seed. Errors only if every sampled triple
/// was collinear.
pub fn detect_suspension(
    ps: &PointSet3,
    tol: f64,
    ransac_iters: u32,
    seed: u64,
) -> Result<DetectionResult, DetectError> {
    let n = ps.len();
    if n < 8 {
        return Err(DetectError::TooFewPoints(n));
    }
    if tol <= 0.0 || !tol.is_finite() {
        return Err(DetectError::InvalidTolerance(tol));
    }
    if ransac_iters < 1 {
        return Err(DetectError::EmptyBudget);
    }

    let scored: Vec<Option<(usize, Frame)>> = (0..ransac_iters)
        .into_par_iter()
        .map(|iter| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, u64::from(iter)));
            let [a, b, c] = sample_distinct(&mut rng, n);
            let frame = Frame::through_circle_points(ps.points[a], ps.points[b], ps.points[c])?;
            let score = (0..n)
                .filter(|&k| !matches!(classify(ps, &frame, tol, k).0, Class::Leftover))
                .count();
            Some((score, frame))
        })
        .collect();

    let best = scored
        .into_iter()
        .flatten()
        .enumerate()
        // max_by_key keeps the later element on ties, so compare with the
        // iteration index negated to prefer the earliest.
        .max_by_key(|&(iter, (score, _))| (score, std::cmp::Reverse(iter)))
        .map(|(_, (_, frame))| frame)
        .ok_or(DetectError::AllSamplesDegenerate(ransac_iters))?;

    let mut c_indices = Vec::new();
    let mut l_indices = Vec::new();
    let mut t_indices = Vec::new();
    let mut residuals = Vec::with_capacity(n);
    for k in 0..n {
        let (class, residual) = classify(ps, &best, tol, k);
        residuals.push(residual);
        match class {
            Class::Circle => c_indices.push(k),
            Class::Line => l_indices.push(k),
            Class::Leftover => t_indices.push(k),
        }
    }
    let t = t_indices.len();
    Ok(DetectionResult { frame: best, c_indices, l_indices, t_indices, residuals, t })
}

/// Outcome of damaging an extremal construction and re-measuring it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub n: usize,
    /// Number of points that were perturbed, `⌊δ'n⌋`.
    pub damaged: usize,
    /// Arc count of the damaged configuration under mode-optimal radii.
    pub e_r: u64,
    /// `e_r / n²`.
    pub e_ratio: f64,
    pub c_count: usize,
    pub l_count: usize,
    pub t: usize,
    pub c_ratio: f64,
    pub l_ratio: f64,
    pub t_ratio: f64,
}

/// Builds the extremal configuration on `n >= 50` points, kicks `⌊δ'n⌋`
/// randomly chosen points far off the structure, reassigns radii by the
/// mode oracle, and reports the measured arc density together with the
/// detector's recovered partition (tolerance 1e-6, 256 iterations).
pub fn stability_experiment(
    n: usize,
    damage_fraction: f64,
    seed: u64,
) -> Result<StabilityReport, DetectError> {
    if n < 50 {
        return Err(DetectError::StabilityTooSmall(n));
    }
    if !(0.0..=0.2).contains(&damage_fraction) {
        return Err(DetectError::InvalidDamageFraction(damage_fraction));
    }
    let base = build_extremal(n)?;
    let mut points = base.points;
    let damaged = (damage_fraction * n as f64).floor() as usize;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in rand::seq::index::sample(&mut rng, n, damaged) {
        // Uniform direction, pushed well clear of the circle and axis.
        let z = rng.gen_range(-1.0..1.0f64);
        let phi = rng.gen::<f64>() * std::f64::consts::TAU;
        let rho = (1.0 - z * z).sqrt();
        let dir = Vec3::new(rho * phi.cos(), rho * phi.sin(), z);
        let magnitude = 2.0 + 3.0 * rng.gen::<f64>();
        points[k] = points[k] + dir * magnitude;
    }

    let (radii, e_r) = optimal_radii(&points, DEFAULT_TOL)?;
    let ps = PointSet3::new(points, radii)?;
    let detection = detect_suspension(&ps, 1e-6, 256, seed)?;
    let nf = n as f64;
    Ok(StabilityReport {
        n,
        damaged,
        e_r,
        e_ratio: e_r as f64 / (nf * nf),
        c_count: detection.c_indices.len(),
        l_count: detection.l_indices.len(),
        t: detection.t,
        c_ratio: detection.c_indices.len() as f64 / nf,
        l_ratio: detection.l_indices.len() as f64 / nf,
        t_ratio: detection.t as f64 / nf,
    })
}
