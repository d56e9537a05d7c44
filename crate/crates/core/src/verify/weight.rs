use std::fmt;

use crate::network::Network;
use crate::numeric::{Interval, ProbScalar, Rational};

/// Largest interval width accepted by an interval-mode check.
pub const MAX_WIDTH: f64 = 1e-12;

/// Scalar type a propagation engine runs on: exact rationals, or
/// outward-rounded intervals when some probability is irrational.
pub trait Weight: Clone + Send + Sync + fmt::Display {
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_prob(p: &ProbScalar, precision_bits: u32) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `keep*self + p*other` where `keep = 1-p`.
    fn mix(&self, other: &Self, p: &Self, keep: &Self) -> Self;
    /// Compare against a target given as `from_rational` of the exact value.
    fn judge(&self, target: &Self, tol: f64) -> Judgement;
    fn width(&self) -> f64;
    fn approx(&self) -> f64;
}

#[derive(Clone, Copy, Debug)]
pub struct Judgement {
    pub pass: bool,
    pub deviation: f64,
    pub width: f64,
}

impl Weight for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn from_prob(p: &ProbScalar, _precision_bits: u32) -> Option<Self> {
        p.as_rational().cloned()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn mix(&self, other: &Self, p: &Self, keep: &Self) -> Self {
        if p.is_zero() {
            return self.clone();
        }
        if keep.is_zero() {
            return other.clone();
        }
        match (Rational::is_zero(self), Rational::is_zero(other)) {
            (true, true) => Rational::zero(),
            (true, false) => p * other,
            (false, true) => keep * self,
            (false, false) => &(keep * self) + &(p * other),
        }
    }

    fn judge(&self, target: &Self, _tol: f64) -> Judgement {
        let pass = self == target;
        Judgement {
            pass,
            deviation: if pass { 0.0 } else { (self - target).abs().to_f64() },
            width: 0.0,
        }
    }

    fn width(&self) -> f64 {
        0.0
    }

    fn approx(&self) -> f64 {
        self.to_f64()
    }
}

impl Weight for Interval {
    const EXACT: bool = false;

    fn zero() -> Self {
        Interval::zero()
    }

    fn one() -> Self {
        Interval::one()
    }

    fn from_prob(p: &ProbScalar, precision_bits: u32) -> Option<Self> {
        Some(p.enclosure(precision_bits))
    }

    fn from_rational(r: &Rational) -> Self {
        Interval::from_rational(r)
    }

    fn is_zero(&self) -> bool {
        self.lo() == 0.0 && self.hi() == 0.0
    }

    fn add(&self, other: &Self) -> Self {
        Interval::add(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        Interval::mul(self, other)
    }

    #[inline]
    fn mix(&self, other: &Self, p: &Self, keep: &Self) -> Self {
        Interval::mix(self, other, p, keep)
    }

    fn judge(&self, t: &Self, tol: f64) -> Judgement {
        let inside = self.lo() - tol <= t.lo() && t.hi() <= self.hi() + tol;
        let width = self.width();
        Judgement {
            pass: inside && width < MAX_WIDTH,
            deviation: (self.midpoint() - t.midpoint()).abs(),
            width,
        }
    }

    fn width(&self) -> f64 {
        Interval::width(self)
    }

    fn approx(&self) -> f64 {
        self.midpoint()
    }
}

/// A swap prepared for propagation: zero-based endpoints plus `p` and `1-p`.
#[derive(Clone, Debug)]
pub struct Step<W> {
    pub a: usize,
    pub b: usize,
    pub p: W,
    pub keep: W,
}

/// Convert every swap of `net` to the weight type; `None` if a probability
/// has no exact representation in `W`.
pub fn prepare<W: Weight>(net: &Network, precision_bits: u32) -> Option<Vec<Step<W>>> {
    net.swaps()
        .iter()
        .map(|s| {
            let (a, b) = s.indices();
            Some(Step {
                a,
                b,
                p: W::from_prob(s.p(), precision_bits)?,
                keep: W::from_prob(&s.p().complement(), precision_bits)?,
            })
        })
        .collect()
}
