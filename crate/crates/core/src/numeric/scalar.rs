use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Interval, NumericError, Rational, Surd};

/// Precision used when a computation has to fall back to an enclosure.
pub const DEFAULT_PRECISION_BITS: u32 = 128;

/// An exact real value: a rational, or a single quadratic surd.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Root(Surd),
}

/// Result of arithmetic on scalars: exact when the operands share a
/// quadratic field, otherwise a certified enclosure.
#[derive(Clone, Debug, PartialEq)]
pub enum Arith {
    Exact(Scalar),
    Enclosure(Interval),
}

impl Scalar {
    pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, NumericError> {
        Rational::new(num, den).map(Scalar::Rat)
    }

    /// `a + b·√c`, collapsed to a rational when the root is rational.
    pub fn surd(a: Rational, b: Rational, c: Rational) -> Result<Self, NumericError> {
        if c.is_negative() {
            return Err(NumericError::NegativeRadicand(c.to_string()));
        }
        Ok(match Surd::normalize(a, b, &c) {
            Ok(s) => Scalar::Root(s),
            Err(r) => Scalar::Rat(r),
        })
    }

    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Root(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Rat(r) => r.signum(),
            Scalar::Root(s) => s.signum(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Root(s) => Scalar::Root(s.neg()),
        }
    }

    /// Exact comparison; `None` only when the values live in different
    /// quadratic fields.
    pub fn cmp_exact(&self, other: &Scalar) -> Option<Ordering> {
        match self.sub(other) {
            Arith::Exact(d) => Some(d.signum().cmp(&0)),
            Arith::Enclosure(_) => None,
        }
    }

    pub fn add(&self, other: &Scalar) -> Arith {
        let exact = match (self, other) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Root(s), Scalar::Rat(r)) | (Scalar::Rat(r), Scalar::Root(s)) => {
                Scalar::Root(s.add_rational(r))
            }
            (Scalar::Root(s), Scalar::Root(t)) if s.same_field(t) => from_result(s.add_same(t)),
            _ => {
                return Arith::Enclosure(
                    self.enclosure(DEFAULT_PRECISION_BITS)
                        .add(&other.enclosure(DEFAULT_PRECISION_BITS)),
                )
            }
        };
        Arith::Exact(exact)
    }

    pub fn sub(&self, other: &Scalar) -> Arith {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Arith {
        let exact = match (self, other) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Root(s), Scalar::Rat(r)) | (Scalar::Rat(r), Scalar::Root(s)) => {
                from_result(s.scale(r))
            }
            (Scalar::Root(s), Scalar::Root(t)) if s.same_field(t) => from_result(s.mul_same(t)),
            _ => {
                return Arith::Enclosure(
                    self.enclosure(DEFAULT_PRECISION_BITS)
                        .mul(&other.enclosure(DEFAULT_PRECISION_BITS)),
                )
            }
        };
        Arith::Exact(exact)
    }

    /// `1 - self`, always exact.
    pub fn one_minus(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(&Rational::one() - r),
            Scalar::Root(s) => Scalar::Root(s.neg().add_rational(&Rational::one())),
        }
    }

    /// Outward-rounded binary64 enclosure. For a surd the root is evaluated
    /// to `precision_bits` fractional bits before rounding, so the width is at
    /// most `|b|·2^-bits` plus two ulps.
    pub fn enclosure(&self, precision_bits: u32) -> Interval {
        match self {
            Scalar::Rat(r) => Interval::from_rational(r),
            Scalar::Root(s) => {
                let (lo, hi) = s.enclose(precision_bits);
                Interval::from_rational_bounds(&lo, &hi)
            }
        }
    }

    pub fn approx(&self) -> f64 {
        self.enclosure(64).midpoint()
    }
}

fn from_result(r: Result<Surd, Rational>) -> Scalar {
    match r {
        Ok(s) => Scalar::Root(s),
        Err(q) => Scalar::Rat(q),
    }
}

impl Arith {
    pub fn enclosure(&self, precision_bits: u32) -> Interval {
        match self {
            Arith::Exact(s) => s.enclosure(precision_bits),
            Arith::Enclosure(i) => *i,
        }
    }

    pub fn exact(&self) -> Option<&Scalar> {
        match self {
            Arith::Exact(s) => Some(s),
            Arith::Enclosure(_) => None,
        }
    }

    fn combine(
        &self,
        other: &Arith,
        exact: impl Fn(&Scalar, &Scalar) -> Arith,
        approx: impl Fn(&Interval, &Interval) -> Interval,
    ) -> Arith {
        match (self, other) {
            (Arith::Exact(x), Arith::Exact(y)) => exact(x, y),
            _ => Arith::Enclosure(approx(
                &self.enclosure(DEFAULT_PRECISION_BITS),
                &other.enclosure(DEFAULT_PRECISION_BITS),
            )),
        }
    }

    pub fn add(&self, other: &Arith) -> Arith {
        self.combine(other, Scalar::add, Interval::add)
    }

    pub fn sub(&self, other: &Arith) -> Arith {
        self.combine(other, Scalar::sub, Interval::sub)
    }

    pub fn mul(&self, other: &Arith) -> Arith {
        self.combine(other, Scalar::mul, Interval::mul)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Root(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

/// A [`Scalar`] known to lie in `[0, 1]`; the parameter of a lazy swap.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ScalarRepr", into = "ScalarRepr")]
pub struct ProbScalar(Scalar);

impl ProbScalar {
    pub fn new(value: Scalar) -> Result<Self, NumericError> {
        let in_range = value.signum() >= 0 && value.one_minus().signum() >= 0;
        if in_range {
            Ok(ProbScalar(value))
        } else {
            Err(NumericError::NotAProbability(value.to_string()))
        }
    }

    pub fn rational(r: Rational) -> Result<Self, NumericError> {
        Self::new(Scalar::Rat(r))
    }

    /// `num/den`; also rejects values outside `[0, 1]`.
    pub fn rat(num: i64, den: i64) -> Result<Self, NumericError> {
        Self::rational(Rational::new(num, den)?)
    }

    pub fn half() -> Self {
        ProbScalar(Scalar::Rat(Rational::half()))
    }

    pub fn zero() -> Self {
        ProbScalar(Scalar::zero())
    }

    pub fn one() -> Self {
        ProbScalar(Scalar::one())
    }

    pub fn value(&self) -> &Scalar {
        &self.0
    }

    pub fn into_scalar(self) -> Scalar {
        self.0
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.0.as_rational()
    }

    pub fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    pub fn complement(&self) -> ProbScalar {
        ProbScalar(self.0.one_minus())
    }

    pub fn enclosure(&self, precision_bits: u32) -> Interval {
        self.0.enclosure(precision_bits)
    }
}

impl fmt::Display for ProbScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ProbScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `rat(num, den)` from the command line and tests.
pub fn rat(num: i64, den: i64) -> Result<ProbScalar, NumericError> {
    ProbScalar::rat(num, den)
}

/// Root in `(0, 1/2)` of `q(1-q) = m / (4(2m-1))`, namely
/// `q = 1/2 - 1/2·√((m-1)/(2m-1))`; exact as a surd.
pub fn solve_division_q(m: u32) -> Result<ProbScalar, NumericError> {
    if m < 2 || m % 2 != 0 {
        return Err(NumericError::Domain(format!(
            "division parameter needs an even size >= 2, got {m}"
        )));
    }
    let m = i64::from(m);
    let radicand = Rational::new(m - 1, 2 * m - 1)?;
    let half = Rational::half();
    let q = Scalar::surd(half.clone(), -half, radicand)?;
    ProbScalar::new(q)
}

/// Outward-rounded enclosure of a probability or general scalar.
pub fn eval_interval(x: &Scalar, precision_bits: u32) -> Interval {
    x.enclosure(precision_bits)
}

// JSON form: {"rat":{"num":"1","den":"2"}} or {"surd":{"a":["n","d"],...}}
#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub(crate) enum ScalarRepr {
    Rat { num: String, den: String },
    Surd {
        a: [String; 2],
        b: [String; 2],
        c: [String; 2],
    },
}

fn pair(r: &Rational) -> [String; 2] {
    let (n, d) = r.to_strings();
    [n, d]
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        match s {
            Scalar::Rat(r) => {
                let (num, den) = r.to_strings();
                ScalarRepr::Rat { num, den }
            }
            Scalar::Root(s) => ScalarRepr::Surd {
                a: pair(s.a()),
                b: pair(s.b()),
                c: pair(&s.c()),
            },
        }
    }
}

impl TryFrom<ScalarRepr> for Scalar {
    type Error = NumericError;

    fn try_from(repr: ScalarRepr) -> Result<Self, Self::Error> {
        match repr {
            ScalarRepr::Rat { num, den } => Ok(Scalar::Rat(Rational::from_strings(&num, &den)?)),
            ScalarRepr::Surd { a, b, c } => Scalar::surd(
                Rational::from_strings(&a[0], &a[1])?,
                Rational::from_strings(&b[0], &b[1])?,
                Rational::from_strings(&c[0], &c[1])?,
            ),
        }
    }
}

impl From<ProbScalar> for ScalarRepr {
    fn from(p: ProbScalar) -> Self {
        ScalarRepr::from(&p.0)
    }
}

impl TryFrom<ScalarRepr> for ProbScalar {
    type Error = NumericError;

    fn try_from(repr: ScalarRepr) -> Result<Self, Self::Error> {
        ProbScalar::new(Scalar::try_from(repr)?)
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        Scalar::try_from(repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_times_one_minus_q(q: &ProbScalar) -> Scalar {
        match q.value().mul(&q.complement().into_scalar()) {
            Arith::Exact(s) => s,
            Arith::Enclosure(_) => panic!("same field product must be exact"),
        }
    }

    #[test]
    fn rat_normalizes() {
        assert_eq!(rat(2, 4).unwrap(), ProbScalar::half());
        assert_eq!(rat(1, 1).unwrap(), ProbScalar::one());
        assert!(rat(3, 2).is_err());
        assert!(rat(-1, 2).is_err());
        assert!(matches!(rat(1, 0), Err(NumericError::ZeroDenominator)));
    }

    #[test]
    fn division_q_at_two() {
        let q = solve_division_q(2).unwrap();
        assert_eq!(q_times_one_minus_q(&q), Scalar::Rat(Rational::ratio(1, 6)));
        let approx = q.value().approx();
        assert!((approx - 0.211_324_865_405_187_1).abs() < 1e-15);
    }

    #[test]
    fn division_q_at_four() {
        let q = solve_division_q(4).unwrap();
        assert_eq!(q_times_one_minus_q(&q), Scalar::Rat(Rational::ratio(1, 7)));
        let half = Scalar::Rat(Rational::half());
        assert_eq!(q.value().cmp_exact(&half), Some(Ordering::Less));
        assert_eq!(q.value().signum(), 1);
    }

    #[test]
    fn division_q_rejects_odd() {
        assert!(solve_division_q(3).is_err());
        assert!(solve_division_q(0).is_err());
    }

    #[test]
    fn conjugate_sum_is_exactly_one() {
        let q = solve_division_q(2).unwrap();
        let sum = q.value().add(&q.complement().into_scalar());
        assert_eq!(sum, Arith::Exact(Scalar::one()));
    }

    #[test]
    fn mixed_radicands_demote_to_enclosure() {
        let q2 = solve_division_q(2).unwrap();
        let q4 = solve_division_q(4).unwrap();
        let prod = q2.value().mul(q4.value());
        let Arith::Enclosure(iv) = prod else {
            panic!("expected enclosure")
        };
        // 64-bit reference: (1/2 - 1/2 sqrt(1/3)) (1/2 - 1/2 sqrt(3/7))
        let reference = 0.211_324_865_405_187_1_f64 * 0.172_673_164_646_011_4_f64;
        assert!((iv.midpoint() - reference).abs() < 1e-15);
        assert!(iv.width() < 1e-15);
    }

    #[test]
    fn json_shapes() {
        let half = serde_json::to_string(&ProbScalar::half()).unwrap();
        assert_eq!(half, r#"{"rat":{"num":"1","den":"2"}}"#);
        let q = solve_division_q(2).unwrap();
        let text = serde_json::to_string(&q).unwrap();
        assert!(text.starts_with(r#"{"surd":{"a":["1","2"]"#));
        let back: ProbScalar = serde_json::from_str(&text).unwrap();
        assert_eq!(back, q);
        let bad = r#"{"rat":{"num":"3","den":"2"}}"#;
        assert!(serde_json::from_str::<ProbScalar>(bad).is_err());
    }

    #[test]
    fn enclosure_of_zero_is_degenerate() {
        assert_eq!(eval_interval(&Scalar::zero(), 53), Interval::zero());
    }
}
