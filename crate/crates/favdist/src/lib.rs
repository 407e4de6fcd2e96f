//! Favourite-distance digraphs on finite point sets in Euclidean 3-space.
//!
//! Every point `x` of a configuration carries a favourite distance
//! `r(x) > 0`, and the digraph draws an arc from `x` to `y` exactly when
//! `d(x, y) = r(x)` (within a relative tolerance). This crate answers the
//! natural extremal question — how many arcs can `n` points carry? — from
//! several directions at once:
//!
//! * [`digraph`]: arc counting, block decompositions, the exact
//!   best-radius oracle, and pattern containment checks.
//! * [`line_dynamics`]: the shift maps governing collinear points whose
//!   favourite distance is their distance to a fixed circle, with an exact
//!   dyadic-angle representation of the successor tree.
//! * [`suspension`]: embedding circle-plus-axis configurations, the
//!   extremal square construction attaining `⌈n²/4 + 5n/2⌉ + 1` arcs, the
//!   strictly weaker hexagon variant, and structural count verification.
//! * [`bounds`]: the integer bound sandwich, Kővári–Sós–Turán-style
//!   pattern bounds, decomposition/induction bounds, and the enumeration
//!   of rational solutions to `sin θ · sin(φ/2) = 1/2`.
//! * [`search`]: simulated annealing over configurations with the radius
//!   assignment optimized exactly at every step.
//! * [`detect`]: RANSAC recovery of circle/axis structure from raw point
//!   sets and a stability experiment measuring how the count degrades
//!   under damage.
//!
//! The commonly used types and operations are re-exported at the crate
//! root.

pub mod bounds;
mod dd;
pub mod detect;
pub mod digraph;
pub mod line_dynamics;
pub mod search;
pub mod suspension;
pub mod vec3;

pub use bounds::{
    decomposition_rhs, f3_bounds, induction_rhs, kst_bipartite, kst_digraph, newman_enumerate,
    BoundReport, BoundsError, KstEntry, NewmanSolution, Rational,
};
pub use detect::{
    detect_suspension, stability_experiment, DetectError, DetectionResult, StabilityReport,
};
pub use digraph::{
    build_digraph, contains_krs, count_between, distance_matches, optimal_radii, ArcDecomposition,
    DigraphError, FavDigraph, PointSet3, DEFAULT_TOL, KRS_MAX_VERTICES,
};
pub use line_dynamics::{
    alpha_of_point, analyze_line_digraph, build_tree_line_set, doubling_cycle, dy_shift,
    mandatory_line_angles, point_of_alpha, pred, succ, DyadicAngle, LineComponent,
    LineComponentStructure, LineDynamicsError, ShiftOp, Sign, MAX_DYADIC_EXP,
};
pub use search::{local_search, InitMode, SearchConfig, SearchError};
pub use suspension::{
    build_extremal, build_hexagon_variant, embed, extremal_arc_count, fixup_radius,
    fixup_separation, golden_angle, hexagon_arc_count, hexagon_split, square_split,
    suspension_ceiling, verify_suspension_counts, CountReport, Frame, FramePosition, LineAngle,
    SuspensionError, SuspensionSpec,
};
pub use vec3::Vec3;
