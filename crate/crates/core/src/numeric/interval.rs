use std::fmt;

use serde::Serialize;

use super::Rational;

/// Closed binary64 interval. Every operation rounds outward by one ulp, so the
/// exact result of the corresponding real operation always lies inside.
#[derive(Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

#[inline]
fn down(x: f64) -> f64 {
    if x == 0.0 {
        // a rounded sum is zero only when the exact sum is zero
        x
    } else {
        x.next_down()
    }
}

#[inline]
fn up(x: f64) -> f64 {
    if x == 0.0 {
        x
    } else {
        x.next_up()
    }
}

// A product that comes out zero is exact only when a factor is zero;
// otherwise it underflowed.
#[inline]
fn mul_down(a: f64, b: f64) -> f64 {
    let x = a * b;
    if x == 0.0 && a != 0.0 && b != 0.0 {
        if (a < 0.0) != (b < 0.0) {
            -f64::from_bits(1)
        } else {
            0.0
        }
    } else {
        down(x)
    }
}

#[inline]
fn mul_up(a: f64, b: f64) -> f64 {
    let x = a * b;
    if x == 0.0 && a != 0.0 && b != 0.0 {
        if (a < 0.0) != (b < 0.0) {
            0.0
        } else {
            f64::from_bits(1)
        }
    } else {
        up(x)
    }
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "interval bounds out of order: [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn zero() -> Self {
        Self::point(0.0)
    }

    pub fn one() -> Self {
        Self::point(1.0)
    }

    pub fn entire() -> Self {
        Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        let (lo, hi) = r.enclose_f64();
        Interval { lo, hi }
    }

    /// Enclosure of the rational range `[lo, hi]`.
    pub fn from_rational_bounds(lo: &Rational, hi: &Rational) -> Self {
        Interval {
            lo: lo.enclose_f64().0,
            hi: hi.enclose_f64().1,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// True when the exact rational lies in the interval.
    pub fn contains_rational(&self, r: &Rational) -> bool {
        match (Rational::from_f64(self.lo), Rational::from_f64(self.hi)) {
            (Some(lo), Some(hi)) => &lo <= r && r <= &hi,
            (None, Some(hi)) => r <= &hi,
            (Some(lo), None) => &lo <= r,
            (None, None) => true,
        }
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval {
            lo: down(self.lo + rhs.lo),
            hi: up(self.hi + rhs.hi),
        }
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        Interval {
            lo: down(self.lo - rhs.hi),
            hi: up(self.hi - rhs.lo),
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let pairs = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let lo = pairs
            .iter()
            .map(|&(a, b)| mul_down(a, b))
            .fold(f64::INFINITY, f64::min);
        let hi = pairs
            .iter()
            .map(|&(a, b)| mul_up(a, b))
            .fold(f64::NEG_INFINITY, f64::max);
        Interval { lo, hi }
    }

    /// `(1-p)*self + p*other` for nonnegative quantities, given `p` and
    /// `keep = 1-p` as separate enclosures. Lower bounds are clamped at zero,
    /// which is sound because every operand is a probability.
    #[inline]
    pub fn mix(&self, other: &Interval, p: &Interval, keep: &Interval) -> Interval {
        let lo = down(mul_down(keep.lo, self.lo) + mul_down(p.lo, other.lo));
        let hi = up(mul_up(keep.hi, self.hi) + mul_up(p.hi, other.hi));
        Interval { lo: lo.max(0.0), hi }
    }

    /// Join of two enclosures.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_is_enclosed() {
        let third = Interval::from_rational(&Rational::ratio(1, 3));
        assert!(third.width() > 0.0 && third.width() < 1e-15);
        assert!(third.contains_rational(&Rational::ratio(1, 3)));
    }

    #[test]
    fn zero_stays_exact() {
        let z = Interval::from_rational(&Rational::zero());
        assert_eq!(z, Interval::zero());
        assert_eq!(z.mul(&Interval::point(0.3)), Interval::zero());
    }

    #[test]
    fn outward_rounding_encloses_exact_sum() {
        // 0.1 + 0.2 is inexact in binary64
        let a = Interval::from_rational(&Rational::ratio(1, 10));
        let b = Interval::from_rational(&Rational::ratio(2, 10));
        let s = a.add(&b);
        assert!(s.contains_rational(&Rational::ratio(3, 10)));
    }

    #[test]
    fn mix_of_halves() {
        let half = Interval::point(0.5);
        let m = Interval::one().mix(&Interval::zero(), &half, &half);
        assert!(m.contains(0.5));
        assert!(m.width() < 1e-15);
    }
}
