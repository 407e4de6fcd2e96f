//! Shared randomized generators for the integration suites. Everything is
//! driven by a caller-supplied RNG so runs are reproducible.
//!
//! Each integration binary compiles its own copy, so not every generator is
//! used by every suite.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use favdist::{
    contains_krs, dy_shift, DyadicAngle, FavDigraph, LineAngle, PointSet3, ShiftOp, SuspensionSpec,
    DEFAULT_TOL,
};

/// A random subtree of the successor tree: `ell` dyadic angles closed
/// under the predecessor map (always containing the root 1/2), grown by
/// uniformly expanding a random frontier child, never deeper than
/// `max_exp` halvings.
pub fn random_subtree(rng: &mut ChaCha8Rng, ell: usize, max_exp: u32) -> Vec<DyadicAngle> {
    assert!(ell >= 1);
    assert!(
        (ell as u64) < (1u64 << max_exp),
        "subtree of {ell} nodes cannot fit above depth {max_exp}"
    );
    let mut tree = vec![DyadicAngle::HALF];
    let mut frontier = Vec::new();
    let extend = |node: DyadicAngle, frontier: &mut Vec<DyadicAngle>| {
        if node.exp() < max_exp {
            frontier.push(dy_shift(node, ShiftOp::SuccMinus).unwrap());
            frontier.push(dy_shift(node, ShiftOp::SuccPlus).unwrap());
        }
    };
    extend(DyadicAngle::HALF, &mut frontier);
    while tree.len() < ell {
        let pick = rng.gen_range(0..frontier.len());
        let node = frontier.swap_remove(pick);
        tree.push(node);
        extend(node, &mut frontier);
    }
    tree
}

/// A random embedded suspension on `n >= 13` points: a random subtree on
/// the axis and `c >= 4` evenly spaced circle points at a random rotation,
/// with arbitrary circle radii. Axis radii are pinned by the embedding.
pub fn random_suspension(rng: &mut ChaCha8Rng, n: usize) -> (PointSet3, usize, usize) {
    assert!(n >= 13);
    let ell = rng.gen_range(5..=n - 4);
    let c = n - ell;
    let line_angles = random_subtree(rng, ell, 12).into_iter().map(LineAngle::Dyadic).collect();
    let rotation = rng.gen::<f64>() * std::f64::consts::TAU;
    let circle_angles =
        (0..c).map(|k| rotation + k as f64 * std::f64::consts::TAU / c as f64).collect();
    let circle_radii = (0..c).map(|_| rng.gen_range(0.25..2.5)).collect();
    let spec = SuspensionSpec::normalized(line_angles, circle_angles, circle_radii);
    (favdist::embed(&spec).unwrap(), ell, c)
}

fn random_arcs(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen::<f64>() < p {
                arcs.push((i, j));
            }
        }
    }
    arcs
}

fn prune_to_krs_free(rng: &mut ChaCha8Rng, n: usize, mut arcs: Vec<(usize, usize)>) -> FavDigraph {
    loop {
        let g = FavDigraph::from_arcs(n, arcs.clone(), DEFAULT_TOL).unwrap();
        if !contains_krs(&g, 2, 2).unwrap() {
            return g;
        }
        arcs.swap_remove(rng.gen_range(0..arcs.len()));
    }
}

/// A random digraph on `n <= 16` vertices certified free of the pattern
/// "two sources with two common out-neighbours" (arcs are deleted at
/// random until the exhaustive check passes).
pub fn random_krs_free_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> FavDigraph {
    let arcs = random_arcs(rng, n, p);
    prune_to_krs_free(rng, n, arcs)
}

/// A random bipartite graph, encoded as a digraph with all arcs from the
/// `m` left vertices to the `n` right vertices, pruned to be free of the
/// same 2x2 pattern (= bipartite K_{2,2}).
pub fn random_krs_free_bipartite(rng: &mut ChaCha8Rng, m: usize, n: usize, p: f64) -> FavDigraph {
    let mut arcs = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if rng.gen::<f64>() < p {
                arcs.push((i, m + j));
            }
        }
    }
    prune_to_krs_free(rng, m + n, arcs)
}
