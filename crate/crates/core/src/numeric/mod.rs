//! Probability scalars: exact rationals, single-radicand quadratic surds and
//! outward-rounded binary64 intervals for values that cannot stay exact.

mod interval;
mod rational;
mod scalar;
mod surd;

pub use interval::Interval;
pub use rational::Rational;
pub use scalar::{
    eval_interval, rat, solve_division_q, Arith, ProbScalar, Scalar, DEFAULT_PRECISION_BITS,
};
pub use surd::Surd;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("value {0} is not a probability")]
    NotAProbability(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}
