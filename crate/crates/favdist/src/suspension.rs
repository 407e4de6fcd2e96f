//! Suspensions: point sets on a circle plus its symmetry axis.
//!
//! A suspension lives inside `C ∪ L` where `C` is a circle and `L` the line
//! through its center perpendicular to its plane; every axis point is
//! equidistant from all circle points, and its radius is pinned to exactly
//! that distance, so each axis point sends an arc to *every* circle point.
//! Circle points keep free radii.
//!
//! This module embeds symbolic suspension descriptions into 3-space and
//! builds the two concrete families studied here:
//!
//! * [`build_extremal`]: a breadth-first successor tree on the axis plus
//!   inscribed squares of radius `sqrt(2)` on the circle (vertices reach two
//!   square neighbours and the axis points ±1). When the circle budget is
//!   not divisible by 4, two squares are pinned at offsets ±γ and up to
//!   three extra vertices of radius `sqrt(4 - 2 sqrt 2)` are added, each
//!   reaching two pinned-square vertices and the axis points ±(sqrt 2 - 1).
//!   Every circle vertex ends with out-degree exactly 4, giving
//!   `(l + 4)(c + 1) - 5` arcs — the ceiling formula `⌈n²/4 + 5n/2⌉ + 1`.
//! * [`build_hexagon_variant`]: the same idea with inscribed unit-side
//!   hexagons (vertices reach two hexagon neighbours and the axis point 0),
//!   worth only out-degree 3 per circle vertex and `(l + 3)(c + 1) - 4`
//!   arcs in total — strictly fewer, which is why squares win.
//!
//! Both builders verify their advertised arc count and circle out-degrees
//! after embedding and re-jitter the free rotation offsets if an accidental
//! coincidence fires, making the generic-position assumption checked rather
//! than hoped for.

use serde::Serialize;
use thiserror::Error;

use crate::digraph::{build_digraph, count_between, distance_matches, DigraphError, PointSet3};
use crate::line_dynamics::{build_tree_line_set, DyadicAngle, LineDynamicsError};
use crate::vec3::Vec3;

#[derive(Debug, Error)]
pub enum SuspensionError {
    #[error("construction needs n >= 13, got {0}")]
    InvalidN(usize),
    #[error("invalid suspension description: {0}")]
    BadSpec(String),
    #[error("frame vectors must be unit length and orthogonal (radius > 0)")]
    BadFrame,
    #[error("not a suspension within tolerance: {0}")]
    NotASuspension(String),
    #[error("could not reach generic position after {attempts} jitter attempts")]
    GenericPositionFailure { attempts: u32 },
    #[error(transparent)]
    Line(#[from] LineDynamicsError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// Rigid placement of a suspension: where the circle sits in 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Frame {
    pub center: Vec3,
    /// Unit normal of the circle plane; the axis direction.
    pub axis_direction: Vec3,
    pub circle_radius: f64,
    /// Unit vector in the circle plane marking angle 0.
    pub reference_direction: Vec3,
}

impl Frame {
    /// Unit circle in the yz-plane, axis along x, angle 0 toward +y.
    pub fn standard() -> Frame {
        Frame {
            center: Vec3::ZERO,
            axis_direction: Vec3::X,
            circle_radius: 1.0,
            reference_direction: Vec3::Y,
        }
    }

    pub fn validate(&self) -> Result<(), SuspensionError> {
        let ok = (self.axis_direction.norm() - 1.0).abs() <= 1e-12
            && (self.reference_direction.norm() - 1.0).abs() <= 1e-12
            && self.axis_direction.dot(self.reference_direction).abs() <= 1e-12
            && self.circle_radius > 0.0
            && self.circle_radius.is_finite();
        if ok {
            Ok(())
        } else {
            Err(SuspensionError::BadFrame)
        }
    }

    /// Second in-plane basis vector, completing a right-handed triple.
    pub fn binormal(&self) -> Vec3 {
        self.axis_direction.cross(self.reference_direction)
    }

    /// The frame whose circle passes through three non-collinear points,
    /// axis along the plane normal. `None` if the points are (nearly)
    /// collinear.
    pub fn through_circle_points(a: Vec3, b: Vec3, c: Vec3) -> Option<Frame> {
        let u = b - a;
        let v = c - a;
        let w = u.cross(v);
        let w2 = w.norm_sq();
        let scale = u.norm_sq().max(v.norm_sq());
        if w2 <= (1e-12 * scale) * (1e-12 * scale) {
            return None;
        }
        // Classical circumcenter formula in the supporting plane.
        let center = a + (w.cross(u) * v.norm_sq() + v.cross(w) * u.norm_sq()) * (0.5 / w2);
        let circle_radius = center.dist(a);
        let axis_direction = w.try_normalize()?;
        let reference_direction = (a - center).try_normalize()?;
        Some(Frame { center, axis_direction, circle_radius, reference_direction })
    }

    /// Cylindrical decomposition of a point relative to this frame.
    pub fn decompose(&self, p: Vec3) -> FramePosition {
        let q = p - self.center;
        let axial = q.dot(self.axis_direction);
        let radial = (q - self.axis_direction * axial).norm();
        FramePosition {
            axial,
            radial,
            circle_residual: (radial - self.circle_radius).hypot(axial),
            axis_residual: radial,
        }
    }
}

/// Where a point sits relative to a frame's circle and axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FramePosition {
    /// Signed offset along the axis.
    pub axial: f64,
    /// Distance from the axis.
    pub radial: f64,
    /// Distance to the circle itself (the set, not the disk).
    pub circle_residual: f64,
    /// Distance to the axis line.
    pub axis_residual: f64,
}

/// An axis point given by its angle fraction in (0, 1): exact dyadic angles
/// embed through the successor path, arbitrary fractions through the
/// cotangent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum LineAngle {
    Dyadic(DyadicAngle),
    Alpha(f64),
}

impl LineAngle {
    /// Normalized axis coordinate of this angle.
    pub fn point(self) -> Result<f64, LineDynamicsError> {
        match self {
            LineAngle::Dyadic(d) => Ok(d.point()),
            LineAngle::Alpha(a) => crate::line_dynamics::point_of_alpha(a),
        }
    }
}

/// Symbolic description of a suspension before embedding: axis points as
/// angles, circle points as circle angles with their radii, and a frame.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuspensionSpec {
    pub line_angles: Vec<LineAngle>,
    pub circle_angles: Vec<f64>,
    pub circle_radii: Vec<f64>,
    pub frame: Frame,
}

impl SuspensionSpec {
    /// A spec in the standard frame.
    pub fn normalized(
        line_angles: Vec<LineAngle>,
        circle_angles: Vec<f64>,
        circle_radii: Vec<f64>,
    ) -> SuspensionSpec {
        SuspensionSpec { line_angles, circle_angles, circle_radii, frame: Frame::standard() }
    }
}

/// Embeds a suspension description into 3-space.
///
/// Axis angle `a` becomes `center + R x(a) axis` with radius
/// `R sqrt(1 + x(a)^2)` — its exact distance to the circle — and circle
/// angle `phi` becomes `center + R (cos phi u + sin phi v)` with its stated
/// radius scaled by `R`. Axis points come first in the output, then circle
/// points, both in input order. Counting results are isometry-covariant:
/// the frame never changes them.
pub fn embed(spec: &SuspensionSpec) -> Result<PointSet3, SuspensionError> {
    spec.frame.validate()?;
    if spec.circle_angles.len() != spec.circle_radii.len() {
        return Err(SuspensionError::BadSpec(format!(
            "{} circle angles vs {} circle radii",
            spec.circle_angles.len(),
            spec.circle_radii.len()
        )));
    }
    let tau = std::f64::consts::TAU;
    let mut sorted: Vec<f64> = spec.circle_angles.iter().map(|a| a.rem_euclid(tau)).collect();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite angles"));
    for k in 0..sorted.len() {
        let gap = if k + 1 < sorted.len() {
            sorted[k + 1] - sorted[k]
        } else if sorted.len() > 1 {
            sorted[0] + tau - sorted[k]
        } else {
            tau
        };
        if gap <= 1e-12 {
            return Err(SuspensionError::BadSpec(format!(
                "circle angles collide near {:.6}",
                sorted[k]
            )));
        }
    }

    let u = spec.frame.reference_direction;
    let v = spec.frame.binormal();
    let r = spec.frame.circle_radius;
    let mut points = Vec::with_capacity(spec.line_angles.len() + spec.circle_angles.len());
    let mut radii = Vec::with_capacity(points.capacity());
    for &angle in &spec.line_angles {
        let x = angle.point()?;
        points.push(spec.frame.center + spec.frame.axis_direction * (r * x));
        radii.push(r * x.hypot(1.0));
    }
    for (&phi, &cr) in spec.circle_angles.iter().zip(&spec.circle_radii) {
        if cr <= 0.0 || !cr.is_finite() {
            return Err(SuspensionError::BadSpec(format!("circle radius {cr} is not positive")));
        }
        points.push(spec.frame.center + u * (r * phi.cos()) + v * (r * phi.sin()));
        radii.push(r * cr);
    }
    Ok(PointSet3::new(points, radii)?)
}

/// Axis/circle budget of the square construction:
/// `l = floor((n-3)/2)`, `c = ceil((n+3)/2)`.
pub fn square_split(n: usize) -> (usize, usize) {
    let ell = n.saturating_sub(3) / 2;
    (ell, n - ell)
}

/// Axis/circle budget of the hexagon variant: balanced for its weaker
/// per-vertex yield, `l = floor((n-2)/2)`, `c = ceil((n+2)/2)`.
pub fn hexagon_split(n: usize) -> (usize, usize) {
    let ell = n.saturating_sub(2) / 2;
    (ell, n - ell)
}

/// Arc count attained by [`build_extremal`]: `(l + 4)(c + 1) - 5`, which
/// telescopes to `⌈n²/4 + 5n/2⌉ + 1`.
pub fn extremal_arc_count(n: usize) -> Result<u64, SuspensionError> {
    if n < 13 {
        return Err(SuspensionError::InvalidN(n));
    }
    let (ell, c) = square_split(n);
    Ok((ell as u64 + 4) * (c as u64 + 1) - 5)
}

/// Arc count attained by [`build_hexagon_variant`]: `(l + 3)(c + 1) - 4`.
pub fn hexagon_arc_count(n: usize) -> Result<u64, SuspensionError> {
    if n < 13 {
        return Err(SuspensionError::InvalidN(n));
    }
    let (ell, c) = hexagon_split(n);
    Ok((ell as u64 + 3) * (c as u64 + 1) - 4)
}

/// Radius of the fix-up circle points: `sqrt(4 - 2 sqrt 2)`, the distance
/// from such a point to the axis points ±(sqrt 2 - 1).
pub fn fixup_radius() -> f64 {
    (4.0 - 2.0 * std::f64::consts::SQRT_2).sqrt()
}

/// Circle-angle separation γ at which a chord has length
/// [`fixup_radius`]; the two pinned squares sit at offsets ±γ so that the
/// fix-up point at angle 0 reaches one vertex of each. The induced chord
/// between those two vertices is `2 sin γ = sqrt(8 (sqrt 2 - 1))`.
pub fn fixup_separation() -> f64 {
    2.0 * (fixup_radius() / 2.0).asin()
}

/// Rotation offset between consecutive free squares/hexagons: the golden
/// angle `pi (3 - sqrt 5)`, whose multiples never align with the lattice of
/// structural chord angles.
pub fn golden_angle() -> f64 {
    std::f64::consts::PI * (3.0 - 5f64.sqrt())
}

const JITTER_STEP: f64 = 5e-4;
const MAX_JITTER_ATTEMPTS: u32 = 8;

/// One rotation group on the circle: `arity` vertices spaced `step` apart
/// starting at `offset`, all with the same radius. `pinned` groups never
/// jitter (their placement is structural).
struct CircleGroup {
    offset: f64,
    arity: usize,
    step: f64,
    radius: f64,
    pinned: bool,
}

/// Individually placed circle points (the fix-up extras).
struct CircleExtra {
    angle: f64,
    radius: f64,
}

fn assemble_and_check(
    n: usize,
    ell: usize,
    line_angles: &[DyadicAngle],
    groups: &[CircleGroup],
    extras: &[CircleExtra],
    expected: u64,
    target_out_degree: usize,
) -> Result<PointSet3, SuspensionError> {
    for attempt in 0..MAX_JITTER_ATTEMPTS {
        let mut circle_angles = Vec::new();
        let mut circle_radii = Vec::new();
        for (idx, g) in groups.iter().enumerate() {
            let jitter =
                if g.pinned { 0.0 } else { f64::from(attempt) * (idx as f64 + 1.0) * JITTER_STEP };
            for k in 0..g.arity {
                circle_angles.push(g.offset + jitter + k as f64 * g.step);
                circle_radii.push(g.radius);
            }
        }
        for e in extras {
            circle_angles.push(e.angle);
            circle_radii.push(e.radius);
        }
        let spec = SuspensionSpec::normalized(
            line_angles.iter().map(|&a| LineAngle::Dyadic(a)).collect(),
            circle_angles,
            circle_radii,
        );
        let ps = embed(&spec)?;
        debug_assert_eq!(ps.len(), n);
        let g = build_digraph(&ps, crate::digraph::DEFAULT_TOL)?;
        let circle_degrees_ok = (ell..n).all(|v| g.out_deg[v] == target_out_degree);
        if g.arc_count() == expected && circle_degrees_ok {
            return Ok(ps);
        }
    }
    Err(SuspensionError::GenericPositionFailure { attempts: MAX_JITTER_ATTEMPTS })
}

/// Builds the extremal square construction on `n >= 13` points.
///
/// Axis points (indices `0..l`) carry the breadth-first successor tree;
/// circle points (indices `l..n`) are `floor(c/4)` inscribed squares of
/// radius `sqrt 2`. When `c % 4 != 0`, two squares are pinned at offsets
/// ±γ and the remainder is taken from the square through angle 0 in the
/// order 0, π/2, π with radius `sqrt(4 - 2 sqrt 2)`. Free squares rotate by
/// golden-angle multiples. The result is verified to have every circle
/// out-degree exactly 4 and exactly [`extremal_arc_count`] arcs.
pub fn build_extremal(n: usize) -> Result<PointSet3, SuspensionError> {
    if n < 13 {
        return Err(SuspensionError::InvalidN(n));
    }
    let (ell, c) = square_split(n);
    let line_angles = build_tree_line_set(ell)?;
    let q = c / 4;
    let rho = c % 4;
    let step = std::f64::consts::FRAC_PI_2;
    let gamma = fixup_separation();
    let mut groups = Vec::new();
    let mut extras = Vec::new();
    if rho == 0 {
        for j in 0..q {
            groups.push(CircleGroup {
                offset: j as f64 * golden_angle(),
                arity: 4,
                step,
                radius: std::f64::consts::SQRT_2,
                pinned: false,
            });
        }
    } else {
        // Two pinned squares at ±γ so the fix-up points can reach one
        // vertex of each; extras fill the remainder of the angle-0 square.
        for offset in [gamma, -gamma] {
            groups.push(CircleGroup {
                offset,
                arity: 4,
                step,
                radius: std::f64::consts::SQRT_2,
                pinned: true,
            });
        }
        for j in 2..q {
            groups.push(CircleGroup {
                offset: j as f64 * golden_angle(),
                arity: 4,
                step,
                radius: std::f64::consts::SQRT_2,
                pinned: false,
            });
        }
        for k in 0..rho {
            extras.push(CircleExtra { angle: k as f64 * step, radius: fixup_radius() });
        }
    }
    assemble_and_check(n, ell, &line_angles, &groups, &extras, extremal_arc_count(n)?, 4)
}

/// Builds the hexagon variant on `n >= 13` points.
///
/// Same skeleton as [`build_extremal`] but with `floor(c/6)` inscribed
/// regular hexagons of radius 1 (side = chord of π/3 = 1 = distance to the
/// axis point 0), so circle vertices only reach out-degree 3. A nonzero
/// remainder `c % 6` is filled with radius-`sqrt(4 - 2 sqrt 2)` points at
/// separation γ from distinct vertices of the pinned hexagon, each likewise
/// reaching out-degree 3 (one hexagon vertex plus the axis points
/// ±(sqrt 2 - 1)). Verified to attain exactly [`hexagon_arc_count`] arcs —
/// always strictly below the square construction.
pub fn build_hexagon_variant(n: usize) -> Result<PointSet3, SuspensionError> {
    if n < 13 {
        return Err(SuspensionError::InvalidN(n));
    }
    let (ell, c) = hexagon_split(n);
    let line_angles = build_tree_line_set(ell)?;
    let h = c / 6;
    let rho = c % 6;
    let step = std::f64::consts::FRAC_PI_3;
    let mut groups = Vec::new();
    for j in 0..h {
        groups.push(CircleGroup {
            offset: j as f64 * golden_angle(),
            arity: 6,
            step,
            radius: 1.0,
            // The first hexagon anchors the extras, so it never jitters.
            pinned: j == 0 && rho > 0,
        });
    }
    let extras = (0..rho)
        .map(|k| CircleExtra {
            angle: k as f64 * step + fixup_separation(),
            radius: fixup_radius(),
        })
        .collect::<Vec<_>>();
    assemble_and_check(n, ell, &line_angles, &groups, &extras, hexagon_arc_count(n)?, 3)
}

/// Four-block arc decomposition of a suspension with the ceiling check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub ell: usize,
    pub c: usize,
    /// Axis-to-circle arcs; always exactly `ell * c`.
    pub e_lc: u64,
    /// Arcs within the axis; at most `ell`.
    pub e_l: u64,
    /// Circle-to-axis arcs; at most `2c`.
    pub e_cl: u64,
    /// Arcs within the circle; at most `2c`.
    pub e_c: u64,
    pub e_total: u64,
    /// The suspension ceiling `⌈n²/4 + 5n/2⌉ + 2`.
    pub formula_value: u64,
    /// Whether every per-block bound and the ceiling hold.
    pub matches: bool,
}

/// The suspension ceiling `⌈n²/4 + 5n/2⌉ + 2` (exact integers).
pub fn suspension_ceiling(n: usize) -> u64 {
    let n = n as u64;
    (n * n + 10 * n).div_ceil(4) + 2
}

/// Verifies that a configuration really is a suspension for the given
/// axis/circle partition and reports its four-block arc decomposition
/// against the per-block bounds and the total ceiling.
///
/// Fails if the partition does not cover the points, the circle members are
/// not concyclic within `tol`, the axis members are off the circle's
/// symmetry axis, or an axis radius differs from the point's distance to
/// the circle.
pub fn verify_suspension_counts(
    ps: &PointSet3,
    l_indices: &[usize],
    c_indices: &[usize],
    tol: f64,
) -> Result<CountReport, SuspensionError> {
    let n = ps.len();
    let ell = l_indices.len();
    let c = c_indices.len();
    if c < 3 {
        return Err(SuspensionError::NotASuspension(format!(
            "need at least 3 circle points to determine the circle, got {c}"
        )));
    }

    // Determine the circle from the first non-collinear circle triple.
    let a = ps.points[c_indices[0]];
    let b = ps.points[c_indices[1]];
    let frame = c_indices[2..]
        .iter()
        .find_map(|&k| Frame::through_circle_points(a, b, ps.points[k]))
        .ok_or_else(|| SuspensionError::NotASuspension("circle points are collinear".into()))?;

    let tau_geom = tol * frame.circle_radius.max(1.0);
    for &k in c_indices {
        let pos = frame.decompose(ps.points[k]);
        if pos.circle_residual > tau_geom {
            return Err(SuspensionError::NotASuspension(format!(
                "point {k} is {:.3e} away from the fitted circle",
                pos.circle_residual
            )));
        }
    }
    for &k in l_indices {
        let pos = frame.decompose(ps.points[k]);
        if pos.axis_residual > tau_geom {
            return Err(SuspensionError::NotASuspension(format!(
                "point {k} is {:.3e} away from the symmetry axis",
                pos.axis_residual
            )));
        }
        if !distance_matches(ps.radii[k], pos.circle_residual, tol) {
            return Err(SuspensionError::NotASuspension(format!(
                "axis point {k} has radius {} but distance {} to the circle",
                ps.radii[k], pos.circle_residual
            )));
        }
    }

    let g = build_digraph(ps, tol)?;
    let dec = count_between(&g, &[("L", l_indices), ("C", c_indices)])?;
    let e_lc = dec.block("L", "C");
    let e_l = dec.block("L", "L");
    let e_cl = dec.block("C", "L");
    let e_c = dec.block("C", "C");
    let e_total = g.arc_count();
    let formula_value = suspension_ceiling(n);
    let matches = e_lc == (ell as u64) * (c as u64)
        && e_l <= ell as u64
        && e_cl <= 2 * c as u64
        && e_c <= 2 * c as u64
        && e_total <= formula_value;
    Ok(CountReport { n, ell, c, e_lc, e_l, e_cl, e_c, e_total, formula_value, matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::DEFAULT_TOL;

    #[test]
    fn embed_single_axis_angle() {
        let spec =
            SuspensionSpec::normalized(vec![LineAngle::Dyadic(DyadicAngle::HALF)], vec![], vec![]);
        let ps = embed(&spec).unwrap();
        assert_eq!(ps.points[0], Vec3::ZERO);
        assert_eq!(ps.radii[0], 1.0);
    }

    #[test]
    fn embed_angle_three_quarters_and_circle_zero() {
        let spec = SuspensionSpec::normalized(
            vec![LineAngle::Dyadic(DyadicAngle::new(3, 2).unwrap())],
            vec![0.0],
            vec![1.0],
        );
        let ps = embed(&spec).unwrap();
        assert_eq!(ps.points[0], Vec3::X);
        assert!((ps.radii[0] - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(ps.points[1], Vec3::Y);
        // Right triangle: the axis point at 1 is sqrt(2) from the circle.
        assert!((ps.points[0].dist(ps.points[1]) - ps.radii[0]).abs() < 1e-15);
    }

    #[test]
    fn embed_rejects_bad_frames_and_colliding_angles() {
        let mut spec = SuspensionSpec::normalized(vec![], vec![0.0, 1.0], vec![1.0, 1.0]);
        spec.frame.axis_direction = Vec3::new(2.0, 0.0, 0.0);
        assert!(matches!(embed(&spec), Err(SuspensionError::BadFrame)));

        let spec = SuspensionSpec::normalized(vec![], vec![1.0, 1.0 + 1e-13], vec![1.0, 1.0]);
        assert!(matches!(embed(&spec), Err(SuspensionError::BadSpec(_))));
    }

    #[test]
    fn splits_match_the_counting_formulas() {
        assert_eq!(square_split(13), (5, 8));
        assert_eq!(square_split(14), (5, 9));
        assert_eq!(square_split(100), (48, 52));
        assert_eq!(hexagon_split(13), (5, 8));
        assert_eq!(hexagon_split(20), (9, 11));
        assert_eq!(extremal_arc_count(13).unwrap(), 76);
        assert_eq!(extremal_arc_count(14).unwrap(), 85);
        assert_eq!(extremal_arc_count(100).unwrap(), 2751);
    }

    #[test]
    fn extremal_thirteen_counts() {
        let ps = build_extremal(13).unwrap();
        let g = build_digraph(&ps, DEFAULT_TOL).unwrap();
        assert_eq!(g.arc_count(), 76);
        let (ell, _) = square_split(13);
        let l: Vec<usize> = (0..ell).collect();
        let c: Vec<usize> = (ell..13).collect();
        let dec = count_between(&g, &[("L", &l), ("C", &c)]).unwrap();
        assert_eq!(dec.block("L", "C"), 40);
        assert_eq!(dec.block("L", "L"), 4);
        assert_eq!(dec.block("C", "L") + dec.block("C", "C"), 32);
    }

    #[test]
    fn extremal_fixup_chord_geometry() {
        // n = 14 has c = 9, so one fix-up point p at angle 0 and pinned
        // squares at ±γ with first vertices a, b.
        let ps = build_extremal(14).unwrap();
        let (ell, _) = square_split(14);
        let a = ps.points[ell]; // first vertex of the +γ square
        let b = ps.points[ell + 4]; // first vertex of the -γ square
        let p = ps.points[ell + 8]; // the fix-up point at angle 0
        assert!((a.dist(p) - fixup_radius()).abs() <= 1e-12);
        assert!((b.dist(p) - fixup_radius()).abs() <= 1e-12);
        let chord = (8.0 * (std::f64::consts::SQRT_2 - 1.0)).sqrt();
        assert!((a.dist(b) - chord).abs() <= 1e-12);
        // 2 sin γ is that chord — the identity the placement relies on.
        assert!((2.0 * fixup_separation().sin() - chord).abs() <= 1e-12);
    }

    #[test]
    fn extremal_rejects_small_n() {
        assert!(matches!(build_extremal(12), Err(SuspensionError::InvalidN(12))));
        assert!(matches!(build_hexagon_variant(12), Err(SuspensionError::InvalidN(12))));
    }

    #[test]
    fn hexagon_counts_and_degrees() {
        let ps = build_hexagon_variant(20).unwrap();
        let g = build_digraph(&ps, DEFAULT_TOL).unwrap();
        assert_eq!(g.arc_count(), hexagon_arc_count(20).unwrap());
        assert!(g.arc_count() < extremal_arc_count(20).unwrap());
        let (ell, _) = hexagon_split(20);
        assert!((ell..20).all(|v| g.out_deg[v] == 3));
    }

    #[test]
    fn hexagon_circle_to_axis_block() {
        // When c is divisible by 6 there are no fix-up extras and every
        // circle vertex reaches exactly one axis point (namely 0).
        let n = 22; // c = 12
        let (ell, c) = hexagon_split(n);
        assert_eq!(c % 6, 0);
        let ps = build_hexagon_variant(n).unwrap();
        let g = build_digraph(&ps, DEFAULT_TOL).unwrap();
        let l: Vec<usize> = (0..ell).collect();
        let cc: Vec<usize> = (ell..n).collect();
        let dec = count_between(&g, &[("L", &l), ("C", &cc)]).unwrap();
        assert_eq!(dec.block("C", "L"), c as u64);
    }

    #[test]
    fn hexagon_extras_add_axis_arcs() {
        // With remainder ρ = c mod 6 > 0, each extra reaches both axis
        // points ±(sqrt 2 - 1), so the circle-to-axis block is c + ρ.
        let n = 24; // c = 13, ρ = 1
        let (ell, c) = hexagon_split(n);
        let rho = c % 6;
        assert!(rho > 0);
        let ps = build_hexagon_variant(n).unwrap();
        let g = build_digraph(&ps, DEFAULT_TOL).unwrap();
        let l: Vec<usize> = (0..ell).collect();
        let cc: Vec<usize> = (ell..n).collect();
        let dec = count_between(&g, &[("L", &l), ("C", &cc)]).unwrap();
        assert_eq!(dec.block("C", "L"), (c + rho) as u64);
    }

    #[test]
    fn verify_reports_extremal_thirteen() {
        let ps = build_extremal(13).unwrap();
        let (ell, _) = square_split(13);
        let l: Vec<usize> = (0..ell).collect();
        let c: Vec<usize> = (ell..13).collect();
        let report = verify_suspension_counts(&ps, &l, &c, DEFAULT_TOL).unwrap();
        assert_eq!(report.e_lc, 40);
        assert_eq!(report.e_l, 4);
        assert_eq!(report.e_cl + report.e_c, 32);
        assert_eq!(report.e_total, 76);
        assert_eq!(report.formula_value, 77);
        assert!(report.matches);
    }

    #[test]
    fn verify_rejects_corrupted_axis_radius() {
        let mut ps = build_extremal(13).unwrap();
        ps.radii[2] *= 1.5;
        let (ell, _) = square_split(13);
        let l: Vec<usize> = (0..ell).collect();
        let c: Vec<usize> = (ell..13).collect();
        let err = verify_suspension_counts(&ps, &l, &c, DEFAULT_TOL).unwrap_err();
        assert!(matches!(err, SuspensionError::NotASuspension(_)));
    }

    #[test]
    fn frame_covariance_of_counts() {
        // A rigid motion of the frame must not change any arc count.
        let base = build_extremal(17).unwrap();
        let g0 = build_digraph(&base, DEFAULT_TOL).unwrap();

        let axis = Vec3::new(1.0, 2.0, -2.0).try_normalize().unwrap();
        let reference = axis.any_perpendicular();
        let (ell, c) = square_split(17);
        let line_angles = build_tree_line_set(ell).unwrap();
        // Rebuild the same spec as build_extremal(17) (c = 10, so two
        // pinned squares at ±γ plus two extras), but in a moved frame.
        let gamma = fixup_separation();
        let mut circle_angles = Vec::new();
        let mut circle_radii = Vec::new();
        for offset in [gamma, -gamma] {
            for k in 0..4 {
                circle_angles.push(offset + k as f64 * std::f64::consts::FRAC_PI_2);
                circle_radii.push(std::f64::consts::SQRT_2);
            }
        }
        let rho = c % 4;
        for k in 0..rho {
            circle_angles.push(k as f64 * std::f64::consts::FRAC_PI_2);
            circle_radii.push(fixup_radius());
        }
        let spec = SuspensionSpec {
            line_angles: line_angles.into_iter().map(LineAngle::Dyadic).collect(),
            circle_angles,
            circle_radii,
            frame: Frame {
                center: Vec3::new(5.0, -3.0, 0.25),
                axis_direction: axis,
                circle_radius: 2.5,
                reference_direction: reference,
            },
        };
        let moved = embed(&spec).unwrap();
        let g1 = build_digraph(&moved, DEFAULT_TOL).unwrap();
        assert_eq!(g0.arc_count(), g1.arc_count());
        assert_eq!(g0.out_deg, g1.out_deg);
    }

    #[test]
    fn fitted_frame_recovers_circle() {
        let ps = build_extremal(15).unwrap();
        let (ell, _) = square_split(15);
        let frame =
            Frame::through_circle_points(ps.points[ell], ps.points[ell + 1], ps.points[ell + 2])
                .unwrap();
        assert!((frame.circle_radius - 1.0).abs() < 1e-12);
        assert!(frame.center.norm() < 1e-12);
        assert!(frame.axis_direction.cross(Vec3::X).norm() < 1e-12);
    }
}
