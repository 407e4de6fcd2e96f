//! Closed-form counting bounds and the sine-product enumeration.
//!
//! The integer sandwich [`f3_bounds`] pins the maximum arc count between
//! the constructive lower bound and the structural upper bound, eleven
//! apart. The Kővári–Sós–Turán evaluators bound arc counts of digraphs
//! with no `K_{r,s}` pattern, and [`decomposition_rhs`]/[`induction_rhs`]
//! evaluate the bounds used to control near-suspension configurations.
//! [`newman_enumerate`] searches rational angle pairs solving
//! `sin(θ) sin(φ/2) = 1/2`, the equation whose only rational-multiple
//! solutions force the two special radii in the extremal analysis.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::dd::{sin_dd, Dd, DD_PI};

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error(
        "pattern sizes must satisfy 1 <= r <= m and 1 <= s <= n, got m={m}, n={n}, r={r}, s={s}"
    )]
    BipartiteRange { m: u64, n: u64, r: u32, s: u32 },
    #[error("need n >= 1 and r, s >= 1, got n={n}, r={r}, s={s}")]
    DigraphRange { n: u64, r: u32, s: u32 },
    #[error("split size t={t} exceeds n={n}")]
    SplitTooLarge { t: u64, n: u64 },
    #[error("coefficient must be positive, got {0}")]
    NonPositiveCoefficient(f64),
    #[error("enumeration needs max_denominator >= 6, got {0}")]
    DenominatorTooSmall(u32),
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
}

/// One evaluated pattern bound, kept alongside a [`BoundReport`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KstEntry {
    pub r: u32,
    pub s: u32,
    pub value: f64,
}

/// The integer sandwich around the maximum arc count on `n` points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: u64,
    /// Constructive bound `⌈n²/4 + 5n/2⌉ + 1`, attained by the square
    /// construction.
    pub lower: u64,
    /// Suspension ceiling `lower + 1`: no suspension exceeds it.
    pub suspension_cap: u64,
    /// Structural bound `lower + 11` for all sufficiently large `n`.
    pub upper: u64,
    /// Optional pattern-bound evaluations attached by the caller.
    pub kst_values: Option<Vec<KstEntry>>,
    /// Optional near-suspension bound evaluation attached by the caller.
    pub induction_value: Option<f64>,
}

/// `⌈n²/4 + 5n/2⌉` in exact integer arithmetic.
fn ceil_base(n: u64) -> u64 {
    let n = u128::from(n);
    (n * n + 10 * n).div_ceil(4) as u64
}

/// Evaluates the integer bound sandwich for `n` points; exact at every n.
///
/// `lower = ⌈n²/4 + 5n/2⌉ + 1`, `suspension_cap = lower + 1`,
/// `upper = lower + 11`. No floating point is involved.
pub fn f3_bounds(n: u64) -> BoundReport {
    let base = ceil_base(n);
    BoundReport {
        n,
        lower: base + 1,
        suspension_cap: base + 2,
        upper: base + 12,
        kst_values: None,
        induction_value: None,
    }
}

/// Maximum edges of an m×n bipartite graph with no `K_{r,s}` whose r-side
/// lies in the m-class: `(s-1)^{1/r} (m-r+1) n^{1-1/r} + (r-1) n`.
pub fn kst_bipartite(m: u64, n: u64, r: u32, s: u32) -> Result<f64, BoundsError> {
    if m < 1 || n < 1 || r < 1 || u64::from(r) > m || s < 1 || u64::from(s) > n {
        return Err(BoundsError::BipartiteRange { m, n, r, s });
    }
    let (m, n, r, s) = (m as f64, n as f64, f64::from(r), f64::from(s));
    Ok((s - 1.0).powf(1.0 / r) * (m - r + 1.0) * n.powf(1.0 - 1.0 / r) + (r - 1.0) * n)
}

/// Maximum arcs of an n-vertex digraph with no directed `K_{r,s}` pattern:
/// `(s-1)^{1/r} n^{2-1/r} + (r-1) n`.
pub fn kst_digraph(n: u64, r: u32, s: u32) -> Result<f64, BoundsError> {
    if n < 1 || r < 1 || s < 1 {
        return Err(BoundsError::DigraphRange { n, r, s });
    }
    let (n, r, s) = (n as f64, f64::from(r), f64::from(s));
    Ok((s - 1.0).powf(1.0 / r) * n.powf(2.0 - 1.0 / r) + (r - 1.0) * n)
}

/// Arc bound for a configuration split into a suspension part and a
/// residual part of `t` points:
/// `¼(n² - 2nt + 2t² + 14n + 6t + 25 + 4At^{5/3}) + 2^{1/3} t (n-t)^{2/3}`.
pub fn decomposition_rhs(n: u64, t: u64, a: f64) -> Result<f64, BoundsError> {
    if t > n {
        return Err(BoundsError::SplitTooLarge { t, n });
    }
    if a.is_nan() || a <= 0.0 {
        return Err(BoundsError::NonPositiveCoefficient(a));
    }
    let (nf, tf) = (n as f64, t as f64);
    let quarter = 0.25
        * (nf * nf - 2.0 * nf * tf
            + 2.0 * tf * tf
            + 14.0 * nf
            + 6.0 * tf
            + 25.0
            + 4.0 * a * tf.powf(5.0 / 3.0));
    Ok(quarter + 2f64.cbrt() * tf * (nf - tf).powf(2.0 / 3.0))
}

/// The induction-shape bound `n²/4 + A n^{5/3}` (defined for every n ≥ 0;
/// only meaningful for A > 0).
pub fn induction_rhs(n: u64, a: f64) -> f64 {
    let nf = n as f64;
    nf * nf / 4.0 + a * nf.powf(5.0 / 3.0)
}

/// Reduced fraction in (0, 1), ordered by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    /// Reduces `num/den`; requires `0 < num < den`.
    pub fn new(num: u64, den: u64) -> Option<Rational> {
        if num == 0 || num >= den {
            return None;
        }
        let g = gcd(num, den);
        Some(Rational { num: num / g, den: den / g })
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = u128::from(self.num) * u128::from(other.den);
        let rhs = u128::from(other.num) * u128::from(self.den);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A rational angle pair `(θ/π, φ/π)` solving `sin θ · sin(φ/2) = 1/2`
/// within the enumeration tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct NewmanSolution {
    pub theta: Rational,
    pub phi: Rational,
}

/// Enumerates reduced rationals `θ/π = a/b`, `φ/π = c/d` in (0, 1) with
/// denominators up to `max_denominator` and returns the pairs where
/// `|sin θ · sin(φ/2) - 1/2| <= tol`.
///
/// θ is folded across 1/2 (the sine is symmetric there), so each solution
/// appears once with θ/π ≤ 1/2. Candidates pass a fast f64 prefilter and
/// are then re-tested in ~32-digit double-double arithmetic, which is what
/// actually decides acceptance: at tol = 1e-12 only the two exact
/// solutions (1/4, 1/2) and (1/2, 1/3) survive.
pub fn newman_enumerate(
    max_denominator: u32,
    tol: f64,
) -> Result<Vec<NewmanSolution>, BoundsError> {
    if max_denominator < 6 {
        return Err(BoundsError::DenominatorTooSmall(max_denominator));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(BoundsError::NonPositiveTolerance(tol));
    }

    // All reduced fractions a/b in (0, 1) with b <= max_denominator,
    // alongside f64 sines of the corresponding angles.
    let mut theta_sines = Vec::new(); // sin(π a/b)
    let mut phi_sines = Vec::new(); // sin(π c/(2d))
    for den in 2..=u64::from(max_denominator) {
        for num in 1..den {
            if gcd(num, den) != 1 {
                continue;
            }
            let frac = Rational { num, den };
            let angle = std::f64::consts::PI * frac.value();
            theta_sines.push((frac, angle.sin()));
            phi_sines.push((frac, (angle / 2.0).sin()));
        }
    }

    let prefilter = tol + 1e-9;
    let mut solutions = BTreeSet::new();
    for &(theta, st) in &theta_sines {
        for &(phi, sp) in &phi_sines {
            if (st * sp - 0.5).abs() > prefilter {
                continue;
            }
            // Elevated-precision recheck decides acceptance.
            let t_angle = DD_PI.mul_f64(theta.num as f64).div_f64(theta.den as f64);
            let p_angle = DD_PI.mul_f64(phi.num as f64).div_f64(2.0 * phi.den as f64);
            let err = sin_dd(t_angle).mul(sin_dd(p_angle)).sub(Dd::from_f64(0.5));
            if err.to_f64().abs() > tol {
                continue;
            }
            let folded = if 2 * theta.num > theta.den {
                Rational { num: theta.den - theta.num, den: theta.den }
            } else {
                theta
            };
            solutions.insert(NewmanSolution { theta: folded, phi });
        }
    }
    Ok(solutions.into_iter().collect())
}
