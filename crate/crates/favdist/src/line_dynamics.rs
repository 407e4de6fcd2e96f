//! Dynamics of favourite distances along the axis of a suspension.
//!
//! In the normalized frame (unit circle, axis through its center) an axis
//! point `x` has radius `sqrt(1 + x^2)`, and the only other axis points at
//! that distance are its two successors `s±(x) = x ± sqrt(1 + x^2)`; the
//! unique in-neighbour of `y != 0` is its predecessor `p(y) = (y - 1/y)/2`.
//!
//! Encoding an axis point by the angle fraction `alpha(x) = theta(x)/pi`
//! with `theta(x) = pi/2 + arctan x` turns these maps into exact binary
//! arithmetic: successors prepend a bit to the binary expansion of `alpha`
//! (halving toward 0 or 1/2 + half), and the predecessor is the binary left
//! shift (doubling mod 1). [`DyadicAngle`] carries that arithmetic exactly,
//! which keeps deep successor trees free of accumulated radicals.
//!
//! The digraph induced on any axis subset has out-degree <= 2 and in-degree
//! <= 1, so every connected component is a directed cycle (length >= 2) with
//! out-directed binary trees attached, or a single such tree;
//! [`analyze_line_digraph`] recovers that structure.

use serde::Serialize;
use thiserror::Error;

use crate::digraph::distance_matches;

#[derive(Debug, Error)]
pub enum LineDynamicsError {
    #[error("0 has no in-neighbour: pred(0) is undefined")]
    PredAtZero,
    #[error("alpha = 1/2 has no predecessor angle (doubling would leave (0,1))")]
    PredOfHalf,
    #[error("alpha must lie strictly between 0 and 1, got {0}")]
    AlphaOutOfRange(f64),
    #[error("dyadic angle {num}/2^{exp} is not in (0,1) or too deep")]
    InvalidDyadic { num: u64, exp: u32 },
    #[error("dyadic depth overflow: exponent would exceed {0}")]
    DepthOverflow(u32),
    #[error("line set needs at least 5 points, got {0}")]
    TreeTooSmall(usize),
    #[error("points/radii length mismatch: {xs} vs {radii}")]
    LengthMismatch { xs: usize, radii: usize },
    #[error(
        "point {index} is not in normalized line form: radius {radius} vs sqrt(1+x^2) = {expected}"
    )]
    NotNormalized { index: usize, radius: f64, expected: f64 },
    #[error("vertex {vertex} violates the line-digraph degree bound ({kind})")]
    DegreeViolation { vertex: usize, kind: &'static str },
    #[error("cycle parameters k = {k}, j = {j} invalid: need 0 < k < 2^j - 1")]
    InvalidCycle { k: u64, j: u32 },
}

/// Which successor to take: `s+(x) = x + sqrt(1+x^2)` or `s-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Exact shift operations on dyadic angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftOp {
    SuccMinus,
    SuccPlus,
    Pred,
}

/// Maximum stored exponent; deeper angles would not round-trip through f64
/// geometry anyway.
pub const MAX_DYADIC_EXP: u32 = 62;

/// Successor map on the axis: `x ± sqrt(1 + x^2)`.
///
/// The cancellation-prone branch is rewritten via the conjugate
/// (`s-(x) = -1/(x + sqrt(1+x^2))` for `x > 0` and symmetrically for `s+`),
/// so both branches stay fully accurate for large `|x|`.
pub fn succ(x: f64, sign: Sign) -> f64 {
    let root = x.hypot(1.0);
    match sign {
        Sign::Plus => {
            if x < 0.0 {
                1.0 / (root - x)
            } else {
                x + root
            }
        }
        Sign::Minus => {
            if x > 0.0 {
                -1.0 / (x + root)
            } else {
                x - root
            }
        }
    }
}

/// Predecessor map on the axis: `p(y) = (y - 1/y)/2`. Undefined at 0.
pub fn pred(y: f64) -> Result<f64, LineDynamicsError> {
    if y == 0.0 {
        return Err(LineDynamicsError::PredAtZero);
    }
    Ok(0.5 * (y - 1.0 / y))
}

/// Angle fraction `alpha(x) = (pi/2 + arctan x)/pi`, a bijection from the
/// axis onto (0, 1).
pub fn alpha_of_point(x: f64) -> f64 {
    0.5 + x.atan() / std::f64::consts::PI
}

/// Inverse of [`alpha_of_point`]: `x = -cot(alpha * pi)`.
///
/// Computed as `-cos(pi a)/sin(pi a)`, which keeps full relative accuracy
/// toward both ends of the interval where `|x|` blows up.
pub fn point_of_alpha(alpha: f64) -> Result<f64, LineDynamicsError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(LineDynamicsError::AlphaOutOfRange(alpha));
    }
    let t = std::f64::consts::PI * alpha;
    Ok(-t.cos() / t.sin())
}

/// Exact dyadic angle `k / 2^m` in (0, 1), stored in lowest terms
/// (`k` odd, `m >= 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DyadicAngle {
    num: u64,
    exp: u32,
}

impl DyadicAngle {
    /// Canonicalizes `num / 2^exp`; rejects values outside (0, 1).
    pub fn new(mut num: u64, mut exp: u32) -> Result<Self, LineDynamicsError> {
        let original = (num, exp);
        while num != 0 && num % 2 == 0 && exp > 0 {
            num /= 2;
            exp -= 1;
        }
        if num == 0 || exp == 0 || exp > MAX_DYADIC_EXP || num >= (1u64 << exp) {
            return Err(LineDynamicsError::InvalidDyadic { num: original.0, exp: original.1 });
        }
        Ok(DyadicAngle { num, exp })
    }

    /// The root angle 1/2, i.e. the axis point 0.
    pub const HALF: DyadicAngle = DyadicAngle { num: 1, exp: 1 };

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn exp(self) -> u32 {
        self.exp
    }

    /// Value as a float; exact, since `num` has at most 53 bits here.
    pub fn alpha(self) -> f64 {
        (self.num as f64) / (1u64 << self.exp) as f64
    }

    /// The axis point with this angle, evaluated by walking the successor
    /// path from 0 rather than through the cotangent, so dyadic tree points
    /// come out with radical-level accuracy (e.g. 3/4 -> exactly 1).
    pub fn point(self) -> f64 {
        // alpha = 0.b1 b2 .. bm with bm = 1; the parent drops b1, so the
        // path from the root applies succ(b_{m-1}), .., succ(b_1), where
        // bit 1 means s+ and bit 0 means s-.
        let mut x = 0.0;
        for i in (1..self.exp).rev() {
            // b_j for j = m-1 down to 1 is bit (m - j) of num.
            let bit = (self.num >> (self.exp - i)) & 1;
            x = succ(x, if bit == 1 { Sign::Plus } else { Sign::Minus });
        }
        x
    }
}

/// Exact shift dynamics on dyadic angles: `succ-` maps `k/2^m` to
/// `k/2^(m+1)`, `succ+` to `(2^m + k)/2^(m+1)`, and `pred` doubles mod 1.
pub fn dy_shift(a: DyadicAngle, op: ShiftOp) -> Result<DyadicAngle, LineDynamicsError> {
    match op {
        ShiftOp::SuccMinus => {
            if a.exp + 1 > MAX_DYADIC_EXP {
                return Err(LineDynamicsError::DepthOverflow(MAX_DYADIC_EXP));
            }
            Ok(DyadicAngle { num: a.num, exp: a.exp + 1 })
        }
        ShiftOp::SuccPlus => {
            if a.exp + 1 > MAX_DYADIC_EXP {
                return Err(LineDynamicsError::DepthOverflow(MAX_DYADIC_EXP));
            }
            Ok(DyadicAngle { num: (1u64 << a.exp) + a.num, exp: a.exp + 1 })
        }
        ShiftOp::Pred => {
            if a.exp == 1 {
                // Doubling 1/2 gives 1, which is not an angle in (0,1):
                // the point 0 has no in-neighbour.
                return Err(LineDynamicsError::PredOfHalf);
            }
            Ok(DyadicAngle { num: a.num % (1u64 << (a.exp - 1)), exp: a.exp - 1 })
        }
    }
}

/// The five mandatory angles {1/2, 1/4, 3/4, 3/8, 5/8}: the axis points
/// 0, -1, 1, 1 - sqrt(2) and sqrt(2) - 1 required by the extremal
/// construction (the circle points of radius sqrt(2) and sqrt(4 - 2 sqrt 2)
/// reach exactly these).
pub fn mandatory_line_angles() -> [DyadicAngle; 5] {
    [
        DyadicAngle { num: 1, exp: 1 },
        DyadicAngle { num: 1, exp: 2 },
        DyadicAngle { num: 3, exp: 2 },
        DyadicAngle { num: 3, exp: 3 },
        DyadicAngle { num: 5, exp: 3 },
    ]
}

/// Builds an `ell`-element subtree of the full binary successor tree of 0,
/// guaranteed to contain the five mandatory angles and closed under `pred`
/// down to the root 1/2.
///
/// After the mandatory five, remaining slots are filled in breadth-first
/// order of the full tree, which keeps `|x|` small (deep one-sided successor
/// chains grow exponentially and would strain the floating-point distance
/// tests). The returned order is: mandatory five, then BFS additions.
/// The digraph induced on the embedded points has exactly `ell - 1` arcs.
pub fn build_tree_line_set(ell: usize) -> Result<Vec<DyadicAngle>, LineDynamicsError> {
    if ell < 5 {
        return Err(LineDynamicsError::TreeTooSmall(ell));
    }
    let mut selected: Vec<DyadicAngle> = mandatory_line_angles().to_vec();
    let mut present: std::collections::BTreeSet<DyadicAngle> = selected.iter().copied().collect();
    let mut queue = std::collections::VecDeque::from([DyadicAngle::HALF]);
    while selected.len() < ell {
        let a = queue.pop_front().expect("full binary tree is infinite");
        if present.insert(a) {
            selected.push(a);
        }
        queue.push_back(dy_shift(a, ShiftOp::SuccMinus)?);
        queue.push_back(dy_shift(a, ShiftOp::SuccPlus)?);
    }
    Ok(selected)
}

/// One weakly connected component of a line digraph: an optional directed
/// cycle (length >= 2) with tree arcs directed away from it, or a pure tree
/// hanging from `root`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineComponent {
    /// All member vertices, increasing.
    pub vertices: Vec<usize>,
    /// Cycle vertices in arc order, starting at the smallest; empty for a
    /// pure tree.
    pub cycle_vertices: Vec<usize>,
    /// The in-degree-0 root of a pure tree; `None` when there is a cycle.
    pub root: Option<usize>,
    /// Non-cycle arcs, each directed away from the cycle or root.
    pub tree_arcs: Vec<(usize, usize)>,
}

/// Cycle-and-tree decomposition of a digraph induced on axis points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineComponentStructure {
    pub components: Vec<LineComponent>,
}

/// Decomposes the favourite-distance digraph of a normalized axis subset.
///
/// Takes axis coordinates `xs` with their radii, validates the normalized
/// form `r(x) = sqrt(1 + x^2)` within `tol`, builds the induced digraph and
/// splits it into components, checking out-degree <= 2 and in-degree <= 1
/// along the way.
pub fn analyze_line_digraph(
    xs: &[f64],
    radii: &[f64],
    tol: f64,
) -> Result<LineComponentStructure, LineDynamicsError> {
    if xs.len() != radii.len() {
        return Err(LineDynamicsError::LengthMismatch { xs: xs.len(), radii: radii.len() });
    }
    let n = xs.len();
    for i in 0..n {
        let expected = xs[i].hypot(1.0);
        if !distance_matches(radii[i], expected, tol) {
            return Err(LineDynamicsError::NotNormalized { index: i, radius: radii[i], expected });
        }
    }

    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if distance_matches((xs[i] - xs[j]).abs(), radii[i], tol) {
                out[i].push(j);
                if out[i].len() > 2 {
                    return Err(LineDynamicsError::DegreeViolation {
                        vertex: i,
                        kind: "out-degree exceeds 2",
                    });
                }
                if parent[j].replace(i).is_some() {
                    return Err(LineDynamicsError::DegreeViolation {
                        vertex: j,
                        kind: "in-degree exceeds 1",
                    });
                }
            }
        }
    }

    // Union by undirected reachability.
    let mut comp = vec![usize::MAX; n];
    let mut n_comp = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = n_comp;
        n_comp += 1;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(v) = stack.pop() {
            let visit = |u: usize, comp: &mut Vec<usize>, stack: &mut Vec<usize>| {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    stack.push(u);
                }
            };
            for &u in &out[v] {
                visit(u, &mut comp, &mut stack);
            }
            if let Some(p) = parent[v] {
                visit(p, &mut comp, &mut stack);
            }
        }
    }

    let mut components = Vec::with_capacity(n_comp);
    for id in 0..n_comp {
        let vertices: Vec<usize> = (0..n).filter(|&v| comp[v] == id).collect();
        // In-degree <= 1 makes the reversed graph functional: walking parent
        // pointers from any vertex ends at an in-degree-0 root or enters the
        // component's unique cycle.
        let mut cycle_vertices = Vec::new();
        let mut root = None;
        let mut walk = vertices[0];
        let mut seen_at = std::collections::BTreeMap::new();
        let mut order = Vec::new();
        loop {
            if let Some(&pos) = seen_at.get(&walk) {
                // Entered a cycle: order[pos..] walked it backward.
                let mut cyc: Vec<usize> = order[pos..].to_vec();
                cyc.reverse(); // now in arc direction
                let min_pos = cyc
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &v)| v)
                    .map(|(i, _)| i)
                    .expect("cycle is nonempty");
                cyc.rotate_left(min_pos);
                cycle_vertices = cyc;
                break;
            }
            seen_at.insert(walk, order.len());
            order.push(walk);
            match parent[walk] {
                Some(p) => walk = p,
                None => {
                    root = Some(walk);
                    break;
                }
            }
        }
        let on_cycle: std::collections::BTreeSet<usize> = cycle_vertices.iter().copied().collect();
        let mut tree_arcs = Vec::new();
        for &v in &vertices {
            for &u in &out[v] {
                if !on_cycle.contains(&u) {
                    tree_arcs.push((v, u));
                }
            }
        }
        tree_arcs.sort_unstable();
        components.push(LineComponent { vertices, cycle_vertices, root, tree_arcs });
    }
    Ok(LineComponentStructure { components })
}

/// The orbit of `k / (2^j - 1)` under the doubling map, as reduced
/// fractions `(numerator, 2^j - 1)`. Such orbits close exactly, and their
/// embedded points realize directed cycles in the line digraph.
pub fn doubling_cycle(k: u64, j: u32) -> Result<Vec<(u64, u64)>, LineDynamicsError> {
    if j == 0 || j >= 63 {
        return Err(LineDynamicsError::InvalidCycle { k, j });
    }
    let den = (1u64 << j) - 1;
    if k == 0 || k >= den {
        return Err(LineDynamicsError::InvalidCycle { k, j });
    }
    let mut orbit = Vec::new();
    let mut cur = k;
    loop {
        orbit.push((cur, den));
        cur = (cur * 2) % den;
        if cur == k {
            break;
        }
    }
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn successors_of_zero_and_one() {
        assert_eq!(succ(0.0, Sign::Plus), 1.0);
        assert_eq!(succ(0.0, Sign::Minus), -1.0);
        assert!((succ(1.0, Sign::Plus) - (1.0 + SQRT2)).abs() < 1e-15);
        assert!((succ(1.0, Sign::Minus) - (1.0 - SQRT2)).abs() < 1e-15);
    }

    #[test]
    fn succ_is_stable_for_large_arguments() {
        // The naive x - sqrt(1+x^2) loses all digits near x = 1e8; the
        // conjugate form keeps |s-(x)| = 1/s+(x) accurate.
        let x = 1e8;
        let sm = succ(x, Sign::Minus);
        let expected = -1.0 / (x + x.hypot(1.0));
        assert!((sm - expected).abs() <= 1e-16 * expected.abs() + f64::MIN_POSITIVE);
        assert!((succ(-x, Sign::Plus) + sm).abs() < 1e-24);
    }

    #[test]
    fn pred_inverts_succ() {
        assert_eq!(pred(1.0).unwrap(), 0.0);
        assert_eq!(pred(-1.0).unwrap(), 0.0);
        assert!((pred(1.0 + SQRT2).unwrap() - 1.0).abs() < 4.0 * f64::EPSILON);
        assert!(matches!(pred(0.0), Err(LineDynamicsError::PredAtZero)));
        for x in [-7.25, -0.3, 0.0, 0.5, 3.0, 123.0] {
            for sign in [Sign::Plus, Sign::Minus] {
                let back = pred(succ(x, sign)).unwrap();
                assert!(
                    (back - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1.0),
                    "pred(succ({x})) = {back}"
                );
            }
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_of_point(0.0), 0.5);
        assert!((alpha_of_point(1.0) - 0.75).abs() < 1e-16);
        assert!((point_of_alpha(0.25).unwrap() + 1.0).abs() < 1e-15);
        assert!(matches!(point_of_alpha(0.0), Err(LineDynamicsError::AlphaOutOfRange(_))));
        assert!(matches!(point_of_alpha(1.0), Err(LineDynamicsError::AlphaOutOfRange(_))));
    }

    #[test]
    fn alpha_round_trip() {
        for &x in &[-1e6, -1234.5, -1.0, -1e-8, 0.0, 0.37, 2.0, 99.0, 1e6] {
            let a = alpha_of_point(x);
            let back = point_of_alpha(a).unwrap();
            // The map's derivative is pi (1 + x^2), so the achievable
            // absolute error scales with 1 + x^2.
            assert!((back - x).abs() <= 1e-12 * (1.0 + x * x), "round trip at {x}: {back}");
            assert!((alpha_of_point(back) - a).abs() <= 1e-12);
        }
    }

    #[test]
    fn dyadic_canonicalization() {
        let a = DyadicAngle::new(4, 3).unwrap(); // 4/8 = 1/2
        assert_eq!(a, DyadicAngle::HALF);
        assert!(DyadicAngle::new(0, 3).is_err());
        assert!(DyadicAngle::new(8, 3).is_err()); // = 1
        assert!(DyadicAngle::new(9, 3).is_err()); // > 1
    }

    #[test]
    fn dyadic_shift_examples() {
        let half = DyadicAngle::HALF;
        let sp = dy_shift(half, ShiftOp::SuccPlus).unwrap();
        assert_eq!((sp.num(), sp.exp()), (3, 2)); // 3/4
        let sm = dy_shift(half, ShiftOp::SuccMinus).unwrap();
        assert_eq!((sm.num(), sm.exp()), (1, 2)); // 1/4
        let back = dy_shift(sp, ShiftOp::Pred).unwrap();
        assert_eq!(back, half); // 3/2 mod 1 = 1/2
        assert!(matches!(dy_shift(half, ShiftOp::Pred), Err(LineDynamicsError::PredOfHalf)));
    }

    #[test]
    fn dyadic_points_are_exact_tree_values() {
        assert_eq!(DyadicAngle::HALF.point(), 0.0);
        assert_eq!(DyadicAngle::new(3, 2).unwrap().point(), 1.0); // s+(0)
        assert_eq!(DyadicAngle::new(1, 2).unwrap().point(), -1.0); // s-(0)
        let q = DyadicAngle::new(5, 3).unwrap().point(); // s+(s-(0)) = sqrt(2)-1
        assert!((q - (SQRT2 - 1.0)).abs() < 1e-15);
        let mq = DyadicAngle::new(3, 3).unwrap().point(); // s-(s+(0)) = 1-sqrt(2)
        assert!((mq - (1.0 - SQRT2)).abs() < 1e-15);
    }

    #[test]
    fn tree_line_set_minimum() {
        let set = build_tree_line_set(5).unwrap();
        let as_pairs: Vec<(u64, u32)> = set.iter().map(|a| (a.num(), a.exp())).collect();
        assert_eq!(as_pairs, vec![(1, 1), (1, 2), (3, 2), (3, 3), (5, 3)]);
        assert!(build_tree_line_set(4).is_err());
    }

    #[test]
    fn tree_line_set_is_pred_closed() {
        for ell in [5, 6, 7, 12, 40, 101] {
            let set = build_tree_line_set(ell).unwrap();
            assert_eq!(set.len(), ell);
            let present: std::collections::BTreeSet<_> = set.iter().copied().collect();
            assert_eq!(present.len(), ell, "angles are distinct");
            for &a in &set {
                if a != DyadicAngle::HALF {
                    let p = dy_shift(a, ShiftOp::Pred).unwrap();
                    assert!(present.contains(&p), "parent of {a:?} missing");
                }
            }
        }
    }

    #[test]
    fn tree_line_set_induces_ell_minus_one_arcs() {
        for ell in [5, 7, 23] {
            let set = build_tree_line_set(ell).unwrap();
            let xs: Vec<f64> = set.iter().map(|a| a.point()).collect();
            let radii: Vec<f64> = xs.iter().map(|x| x.hypot(1.0)).collect();
            let s = analyze_line_digraph(&xs, &radii, 1e-9).unwrap();
            assert_eq!(s.components.len(), 1);
            let comp = &s.components[0];
            assert!(comp.cycle_vertices.is_empty());
            assert_eq!(comp.root, Some(0), "root is the axis point 0");
            assert_eq!(comp.tree_arcs.len(), ell - 1);
        }
    }

    #[test]
    fn doubling_pair_realizes_two_cycle() {
        let orbit = doubling_cycle(1, 2).unwrap();
        assert_eq!(orbit, vec![(1, 3), (2, 3)]);
        let xs: Vec<f64> =
            orbit.iter().map(|&(k, den)| point_of_alpha(k as f64 / den as f64).unwrap()).collect();
        let radii: Vec<f64> = xs.iter().map(|x| x.hypot(1.0)).collect();
        // d(x1, x2) = 2/sqrt(3) = sqrt(1 + 1/3) = both radii.
        let d = (xs[0] - xs[1]).abs();
        assert!((d - radii[0]).abs() < 1e-10);
        assert!((d - radii[1]).abs() < 1e-10);
        let s = analyze_line_digraph(&xs, &radii, 1e-9).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].cycle_vertices, vec![0, 1]);
        assert_eq!(s.components[0].root, None);
        assert!(s.components[0].tree_arcs.is_empty());
    }

    #[test]
    fn disjoint_union_keeps_both_structures() {
        // Tree set of 5 together with the {1/3, 2/3} cycle pair.
        let tree = build_tree_line_set(5).unwrap();
        let mut xs: Vec<f64> = tree.iter().map(|a| a.point()).collect();
        xs.push(point_of_alpha(1.0 / 3.0).unwrap());
        xs.push(point_of_alpha(2.0 / 3.0).unwrap());
        let radii: Vec<f64> = xs.iter().map(|x| x.hypot(1.0)).collect();
        let s = analyze_line_digraph(&xs, &radii, 1e-9).unwrap();
        assert_eq!(s.components.len(), 2);
        let tree_comp = s
            .components
            .iter()
            .find(|c| c.cycle_vertices.is_empty())
            .expect("tree component present");
        assert_eq!(tree_comp.tree_arcs.len(), 4);
        let cycle_comp = s
            .components
            .iter()
            .find(|c| !c.cycle_vertices.is_empty())
            .expect("cycle component present");
        assert_eq!(cycle_comp.cycle_vertices, vec![5, 6]);
    }

    #[test]
    fn analyze_rejects_unnormalized_radii() {
        let err = analyze_line_digraph(&[0.0, 1.0], &[1.0, 2.0], 1e-9).unwrap_err();
        assert!(matches!(err, LineDynamicsError::NotNormalized { index: 1, .. }));
    }

    #[test]
    fn shift_and_geometry_commute_on_samples() {
        let mut angle = DyadicAngle::HALF;
        for (i, op) in [ShiftOp::SuccPlus, ShiftOp::SuccMinus, ShiftOp::SuccPlus].iter().enumerate()
        {
            let next = dy_shift(angle, *op).unwrap();
            let sign = if *op == ShiftOp::SuccPlus { Sign::Plus } else { Sign::Minus };
            let geometric = succ(angle.point(), sign);
            assert!(
                (next.point() - geometric).abs() <= 1e-10 * geometric.abs().max(1.0),
                "step {i}"
            );
            angle = next;
        }
    }
}
