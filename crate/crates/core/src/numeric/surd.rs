use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Largest trial divisor used when pulling square factors out of a radicand.
const TRIAL_LIMIT: u64 = 1 << 20;

/// The real number `a + b·√r` with `b ≠ 0` and `r > 1` an integer free of
/// square factors below the trial limit (in practice: square-free).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    a: Rational,
    b: Rational,
    radicand: BigInt,
}

/// Split a nonnegative integer into `s² · r` with `r` as square-free as
/// trial division up to [`TRIAL_LIMIT`] can make it.
pub(crate) fn extract_square(m: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!m.is_negative());
    let mut rest = m.clone();
    let mut square_root = BigInt::one();
    let mut free = BigInt::one();
    if rest.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT {
        let dd = BigInt::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut exponent = 0u32;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            exponent += 1;
        }
        if exponent > 0 {
            square_root *= dd.pow(exponent / 2);
            if exponent % 2 == 1 {
                free *= &dd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        square_root *= root;
    } else {
        free *= rest;
    }
    (square_root, free)
}

impl Surd {
    /// Normalizes `a + b·√c`; returns `Err(value)` with the rational value
    /// when the surd part vanishes.
    pub(crate) fn normalize(a: Rational, b: Rational, c: &Rational) -> Result<Surd, Rational> {
        assert!(!c.is_negative(), "negative radicand");
        if b.is_zero() || c.is_zero() {
            return Err(a);
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let m = c.numer() * c.denom();
        let (square_root, free) = extract_square(&m);
        let coefficient = &b * &Rational::new(square_root, c.denom().clone()).expect("q > 0");
        if free.is_one() {
            return Err(a + coefficient);
        }
        Ok(Surd {
            a,
            b: coefficient,
            radicand: free,
        })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The radicand as an (integral) rational.
    pub fn c(&self) -> Rational {
        Rational::from_integer(self.radicand.clone())
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    /// Exact sign: compares `a²` with `b²·r` when the signs of `a` and `b` differ.
    pub fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sa == 0 || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2r = &(&self.b * &self.b) * &self.c();
        match a2.cmp(&b2r) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0, // impossible for an irrational radicand
        }
    }

    pub fn neg(&self) -> Surd {
        Surd {
            a: -&self.a,
            b: -&self.b,
            radicand: self.radicand.clone(),
        }
    }

    /// Conjugate `a - b·√r`.
    pub fn conjugate(&self) -> Surd {
        Surd {
            a: self.a.clone(),
            b: -&self.b,
            radicand: self.radicand.clone(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> Surd {
        Surd {
            a: &self.a + r,
            b: self.b.clone(),
            radicand: self.radicand.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Result<Surd, Rational> {
        if r.is_zero() {
            return Err(Rational::zero());
        }
        Ok(Surd {
            a: &self.a * r,
            b: &self.b * r,
            radicand: self.radicand.clone(),
        })
    }

    pub fn same_field(&self, other: &Surd) -> bool {
        self.radicand == other.radicand
    }

    /// Sum within one quadratic field.
    pub fn add_same(&self, other: &Surd) -> Result<Surd, Rational> {
        debug_assert!(self.same_field(other));
        let a = &self.a + &other.a;
        let b = &self.b + &other.b;
        if b.is_zero() {
            return Err(a);
        }
        Ok(Surd {
            a,
            b,
            radicand: self.radicand.clone(),
        })
    }

    /// Product within one quadratic field.
    pub fn mul_same(&self, other: &Surd) -> Result<Surd, Rational> {
        debug_assert!(self.same_field(other));
        let r = self.c();
        let a = &(&self.a * &other.a) + &(&(&self.b * &other.b) * &r);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        if b.is_zero() {
            return Err(a);
        }
        Ok(Surd {
            a,
            b,
            radicand: self.radicand.clone(),
        })
    }

    /// Rational bounds `lo <= value <= hi` with `hi - lo = |b| / 2^bits`.
    pub fn enclose(&self, bits: u32) -> (Rational, Rational) {
        let scaled = &self.radicand << (2 * bits as usize);
        let s = scaled.sqrt();
        let scale = BigInt::one() << bits as usize;
        let below = Rational::new(s.clone(), scale.clone()).expect("nonzero");
        let above = Rational::new(s + 1, scale).expect("nonzero");
        let (lo_root, hi_root) = if self.b.numer().sign() == Sign::Minus {
            (&self.b * &above, &self.b * &below)
        } else {
            (&self.b * &below, &self.b * &above)
        };
        (&self.a + &lo_root, &self.a + &hi_root)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{} {} {}·√{}", self.a, sign, self.b.abs(), self.radicand)
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
