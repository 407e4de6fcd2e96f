//! Minimal double-double arithmetic (~32 significant digits) used to
//! recheck near-solutions of the sine product equation well below f64
//! noise. Only the handful of operations the enumeration needs.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// π to double-double precision.
pub(crate) const DD_PI: Dd = Dd { hi: std::f64::consts::PI, lo: 1.2246467991473532e-16 };

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Requires `|a| >= |b|` (or a == 0).
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub fn from_f64(a: f64) -> Dd {
        Dd { hi: a, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p1, p2 + self.hi * o.lo + self.lo * o.hi);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * b);
        Dd { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Dd {
        let q1 = self.hi / b;
        let (p1, p2) = two_prod(q1, b);
        let r = self.sub(Dd { hi: p1, lo: p2 });
        let q2 = (r.hi + r.lo) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}

/// sin(x) for x in (0, π), accurate to roughly 1e-31.
///
/// Reduces by the symmetry sin(π - x) = sin(x) and then, on (0, π/2],
/// evaluates whichever Taylor series (sine at x or cosine at π/2 - x) has
/// its argument in [0, π/4], where both converge in under twenty terms.
pub(crate) fn sin_dd(x: Dd) -> Dd {
    let half_pi = DD_PI.div_f64(2.0);
    let quarter_pi = DD_PI.div_f64(4.0);
    let x = if x.hi > half_pi.hi { DD_PI.sub(x) } else { x };
    if x.hi > quarter_pi.hi {
        cos_series(half_pi.sub(x))
    } else {
        sin_series(x)
    }
}

fn sin_series(x: Dd) -> Dd {
    let x2 = x.mul(x);
    let mut term = x;
    let mut sum = x;
    for k in 1u32..40 {
        let denom = -f64::from(2 * k * (2 * k + 1));
        term = term.mul(x2).div_f64(denom);
        sum = sum.add(term);
        if term.hi.abs() < 1e-35 {
            break;
        }
    }
    sum
}

fn cos_series(y: Dd) -> Dd {
    let y2 = y.mul(y);
    let mut term = Dd::from_f64(1.0);
    let mut sum = term;
    for k in 1u32..40 {
        let denom = -f64::from((2 * k - 1) * (2 * k));
        term = term.mul(y2).div_f64(denom);
        sum = sum.add(term);
        if term.hi.abs() < 1e-35 {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_keeps_extra_digits() {
        // (1 + 2^-60) - 1 == 2^-60 survives in dd but not in f64.
        let tiny = (2f64).powi(-60);
        let x = Dd::from_f64(1.0).add(Dd::from_f64(tiny));
        assert_eq!(x.hi, 1.0);
        assert_eq!(x.sub(Dd::from_f64(1.0)).to_f64(), tiny);
    }

    #[test]
    fn sin_of_pi_sixth_is_half() {
        let s = sin_dd(DD_PI.div_f64(6.0));
        let err = s.sub(Dd::from_f64(0.5));
        assert!(err.to_f64().abs() < 1e-30, "error {:e}", err.to_f64());
    }

    #[test]
    fn sin_squared_of_pi_quarter_is_half() {
        let s = sin_dd(DD_PI.div_f64(4.0));
        let err = s.mul(s).sub(Dd::from_f64(0.5));
        assert!(err.to_f64().abs() < 1e-30);
    }

    #[test]
    fn sin_of_half_pi_is_one() {
        let s = sin_dd(DD_PI.div_f64(2.0));
        assert_eq!(s.hi, 1.0);
        assert!(s.lo.abs() < 1e-30);
    }

    #[test]
    fn matches_f64_sine_across_the_interval() {
        // The f64 reference evaluates sine at the *rounded* angle, so the
        // comparison carries that argument error (~|cos|·x·eps) on top of
        // the library sine's own half-ulp.
        for k in 1..200 {
            let x = std::f64::consts::PI * f64::from(k) / 200.0;
            let s = sin_dd(DD_PI.mul_f64(f64::from(k)).div_f64(200.0));
            assert!((s.to_f64() - x.sin()).abs() < 1e-15, "k = {k}");
        }
    }
}
