//! Favourite-distance digraphs on finite point sets.
//!
//! A configuration is a point set `S` in 3-space together with a radius
//! assignment `r: S -> (0, inf)`; its favourite-distance digraph has an arc
//! `(x, y)` whenever `d(x, y) = r(x)`. Equality is tested with the relative
//! tolerance predicate `|d - r| <= tol * max(1, r)`; the construction
//! coordinates produced elsewhere in this crate are accurate to roughly
//! 1e-15, so the default tolerance of 1e-9 leaves a wide margin between true
//! incidences and near-misses.
//!
//! Besides building and counting the digraph, this module provides the exact
//! inner maximization over radii for a fixed point set ([`optimal_radii`],
//! the "mode oracle": every point favours its most frequent distance) and a
//! brute-force detector for complete bipartite arc patterns
//! ([`contains_krs`]) used to sanity-check the Zarankiewicz-style bounds on
//! small instances.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::vec3::Vec3;

/// Default tolerance for the distance-equality predicate.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest vertex count accepted by [`contains_krs`] (exponential scan).
pub const KRS_MAX_VERTICES: usize = 16;

#[derive(Debug, Error)]
pub enum DigraphError {
    #[error("points/radii length mismatch: {points} points vs {radii} radii")]
    LengthMismatch { points: usize, radii: usize },
    #[error("radius {value} at index {index} is not positive")]
    NonPositiveRadius { index: usize, value: f64 },
    #[error("points {i} and {j} coincide up to tolerance (distance {dist:.3e})")]
    DuplicatePoints { i: usize, j: usize, dist: f64 },
    #[error("tolerance must be finite and nonnegative, got {0}")]
    InvalidTolerance(f64),
    #[error("need at least {min} points, got {n}")]
    TooFewPoints { n: usize, min: usize },
    #[error("arc ({i}, {j}) is out of range or a self-loop for n = {n}")]
    InvalidArc { i: usize, j: usize, n: usize },
    #[error("partition does not cover vertex {0} exactly once")]
    PartitionMismatch(usize),
    #[error("partition classes must have distinct labels, `{0}` repeats")]
    DuplicateLabel(String),
    #[error("r = {r}, s = {s} must both be positive")]
    InvalidPattern { r: u32, s: u32 },
    #[error("instance-size guard exceeded: n = {n} > {max} vertices")]
    SizeGuardExceeded { n: usize, max: usize },
}

/// A point set with its radius assignment: the pair `(S, r)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointSet3 {
    pub points: Vec<Vec3>,
    pub radii: Vec<f64>,
    /// Free-form annotation, not interpreted by the library.
    pub meta: Option<String>,
}

impl PointSet3 {
    /// Builds a configuration, checking lengths and radius positivity.
    /// Point distinctness depends on a tolerance and is checked by
    /// [`build_digraph`].
    pub fn new(points: Vec<Vec3>, radii: Vec<f64>) -> Result<Self, DigraphError> {
        if points.len() != radii.len() {
            return Err(DigraphError::LengthMismatch { points: points.len(), radii: radii.len() });
        }
        for (index, &value) in radii.iter().enumerate() {
            if value <= 0.0 || !value.is_finite() {
                return Err(DigraphError::NonPositiveRadius { index, value });
            }
        }
        Ok(PointSet3 { points, radii, meta: None })
    }

    pub fn with_meta(mut self, meta: impl Into<String>) -> Self {
        self.meta = Some(meta.into());
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The arc set `E_r(S)` with degree profiles.
///
/// Arcs are kept sorted lexicographically, so per-source rows are contiguous.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FavDigraph {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
    pub out_deg: Vec<usize>,
    pub in_deg: Vec<usize>,
    /// Tolerance the digraph was built with (0 for synthetic arc sets).
    pub tol: f64,
}

impl FavDigraph {
    /// Assembles a digraph from an explicit arc list (synthetic inputs,
    /// tests). Rejects self-loops, out-of-range endpoints and duplicates.
    pub fn from_arcs(
        n: usize,
        mut arcs: Vec<(usize, usize)>,
        tol: f64,
    ) -> Result<Self, DigraphError> {
        for &(i, j) in &arcs {
            if i >= n || j >= n || i == j {
                return Err(DigraphError::InvalidArc { i, j, n });
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        let mut out_deg = vec![0usize; n];
        let mut in_deg = vec![0usize; n];
        for &(i, j) in &arcs {
            out_deg[i] += 1;
            in_deg[j] += 1;
        }
        Ok(FavDigraph { n, arcs, out_deg, in_deg, tol })
    }

    /// Number of arcs `e_r(S)`.
    pub fn arc_count(&self) -> u64 {
        self.arcs.len() as u64
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs.binary_search(&(i, j)).is_ok()
    }

    /// Arc targets of source `i`, in increasing order.
    pub fn out_neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let lo = self.arcs.partition_point(|&(a, _)| a < i);
        let hi = self.arcs.partition_point(|&(a, _)| a <= i);
        self.arcs[lo..hi].iter().map(|&(_, j)| j)
    }
}

/// Whether `d` counts as equal to radius `r` under the relative tolerance.
#[inline]
pub fn distance_matches(d: f64, r: f64, tol: f64) -> bool {
    (d - r).abs() <= tol * r.max(1.0)
}

/// Builds the favourite-distance digraph of a configuration.
///
/// Runs the quadratic pair scan row-parallel; the arc order is independent
/// of the thread schedule. Rejects coincident points (the configuration is a
/// set) and non-positive radii.
pub fn build_digraph(ps: &PointSet3, tol: f64) -> Result<FavDigraph, DigraphError> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(DigraphError::InvalidTolerance(tol));
    }
    if ps.points.len() != ps.radii.len() {
        return Err(DigraphError::LengthMismatch {
            points: ps.points.len(),
            radii: ps.radii.len(),
        });
    }
    for (index, &value) in ps.radii.iter().enumerate() {
        if value <= 0.0 || !value.is_finite() {
            return Err(DigraphError::NonPositiveRadius { index, value });
        }
    }
    let n = ps.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let dist = ps.points[i].dist(ps.points[j]);
            if dist <= tol {
                return Err(DigraphError::DuplicatePoints { i, j, dist });
            }
        }
    }

    let rows: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for j in 0..n {
                if j != i && distance_matches(ps.points[i].dist(ps.points[j]), ps.radii[i], tol) {
                    row.push(j);
                }
            }
            row
        })
        .collect();

    let mut arcs = Vec::new();
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    for (i, row) in rows.into_iter().enumerate() {
        out_deg[i] = row.len();
        for j in row {
            in_deg[j] += 1;
            arcs.push((i, j));
        }
    }
    Ok(FavDigraph { n, arcs, out_deg, in_deg, tol })
}

/// Per-block arc counts `e_r(A, B)` for a labelled vertex partition.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcDecomposition {
    /// Count for every ordered pair of class labels (zero blocks included).
    pub blocks: BTreeMap<(String, String), u64>,
}

impl ArcDecomposition {
    /// Count of arcs from class `a` to class `b` (0 for unknown labels).
    pub fn block(&self, a: &str, b: &str) -> u64 {
        self.blocks.get(&(a.to_owned(), b.to_owned())).copied().unwrap_or(0)
    }

    /// Sum of all blocks; equals the digraph's arc count.
    pub fn total(&self) -> u64 {
        self.blocks.values().sum()
    }
}

/// Counts arcs between every ordered pair of partition classes.
///
/// The classes must cover each vertex exactly once.
pub fn count_between(
    g: &FavDigraph,
    classes: &[(&str, &[usize])],
) -> Result<ArcDecomposition, DigraphError> {
    let mut label_of = vec![usize::MAX; g.n];
    let mut seen = std::collections::BTreeSet::new();
    for (c, (label, members)) in classes.iter().enumerate() {
        if !seen.insert(*label) {
            return Err(DigraphError::DuplicateLabel((*label).to_owned()));
        }
        for &v in *members {
            if v >= g.n || label_of[v] != usize::MAX {
                return Err(DigraphError::PartitionMismatch(v));
            }
            label_of[v] = c;
        }
    }
    if let Some(v) = label_of.iter().position(|&c| c == usize::MAX) {
        return Err(DigraphError::PartitionMismatch(v));
    }

    let mut blocks = BTreeMap::new();
    for (a, _) in classes {
        for (b, _) in classes {
            blocks.insert(((*a).to_owned(), (*b).to_owned()), 0u64);
        }
    }
    for &(i, j) in &g.arcs {
        let key = (classes[label_of[i]].0.to_owned(), classes[label_of[j]].0.to_owned());
        *blocks.get_mut(&key).expect("all label pairs preseeded") += 1;
    }
    Ok(ArcDecomposition { blocks })
}

/// Exact inner maximization over radii for a fixed point set.
///
/// For each point the distances to all others are sorted and greedily
/// clustered: a cluster keeps absorbing the next distance while it stays
/// within `tol * max(1, representative)` of the cluster's smallest member
/// (the representative). The point is assigned the representative of a
/// largest cluster — ties broken toward the smallest representative — and
/// `e_value` sums the winning multiplicities, which is the exact maximum of
/// `e_r` over all radius assignments at this tolerance.
pub fn optimal_radii(points: &[Vec3], tol: f64) -> Result<(Vec<f64>, u64), DigraphError> {
    if points.len() < 2 {
        return Err(DigraphError::TooFewPoints { n: points.len(), min: 2 });
    }
    if !tol.is_finite() || tol < 0.0 {
        return Err(DigraphError::InvalidTolerance(tol));
    }
    let per_vertex: Vec<(f64, u64)> = points
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut dists: Vec<f64> = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| p.dist(*q))
                .collect();
            dists.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite distances"));
            let mut best_mult = 0u64;
            let mut best_rep = f64::INFINITY;
            let mut k = 0;
            while k < dists.len() {
                let rep = dists[k];
                let band = tol * rep.max(1.0);
                let mut mult = 1u64;
                k += 1;
                while k < dists.len() && dists[k] - rep <= band {
                    mult += 1;
                    k += 1;
                }
                if mult > best_mult || (mult == best_mult && rep < best_rep) {
                    best_mult = mult;
                    best_rep = rep;
                }
            }
            (best_rep, best_mult)
        })
        .collect();
    let radii = per_vertex.iter().map(|&(r, _)| r).collect();
    let e_value = per_vertex.iter().map(|&(_, m)| m).sum();
    Ok((radii, e_value))
}

/// Whether some `r`-subset of vertices has at least `s` common
/// out-neighbours — a copy of the complete bipartite arc pattern with all
/// arcs from the `r`-set to an `s`-set.
///
/// Exhaustive over all vertex subsets, so the instance size is capped at
/// [`KRS_MAX_VERTICES`]. A common out-neighbour of the whole source set can
/// never itself be a source (that would need a self-loop), so the two sides
/// are automatically disjoint.
pub fn contains_krs(g: &FavDigraph, r: u32, s: u32) -> Result<bool, DigraphError> {
    if r == 0 || s == 0 {
        return Err(DigraphError::InvalidPattern { r, s });
    }
    if g.n > KRS_MAX_VERTICES {
        return Err(DigraphError::SizeGuardExceeded { n: g.n, max: KRS_MAX_VERTICES });
    }
    if r as usize > g.n || s as usize > g.n {
        return Ok(false);
    }
    let mut out_mask = vec![0u32; g.n];
    for &(i, j) in &g.arcs {
        out_mask[i] |= 1 << j;
    }
    let full: u32 = if g.n == 32 { u32::MAX } else { (1 << g.n) - 1 };
    for subset in 1..=full {
        if subset.count_ones() != r {
            continue;
        }
        let mut common = full;
        let mut m = subset;
        while m != 0 && common.count_ones() >= s {
            let i = m.trailing_zeros() as usize;
            common &= out_mask[i];
            m &= m - 1;
        }
        if common.count_ones() >= s {
            return Ok(true);
        }
    }
    Ok(false)
}
