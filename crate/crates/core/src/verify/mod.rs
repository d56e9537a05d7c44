//! Exact and interval-certified checkers: marginal, pair and
//! full-distribution propagation, and the uniformity, division and
//! reachability predicates built on them.

mod checks;
mod propagate;
mod reach;
mod weight;

pub use checks::{
    check_division, check_full_uniform, check_pair_uniform, check_reachability, check_strong1, check_strong2,
    division_aggregates, division_targets, CheckOptions, Mode, Verdict, Witness,
    DEFAULT_TOLERANCE,
};
pub use propagate::{
    full_distribution, full_distribution_with, pair_marginal, pair_marginal_at,
    propagate_marginal, propagate_pair, single_marginal, single_marginal_at, FullDistribution,
    MarginalMatrix, Marginals, PairDistribution, Pairs, FULL_DISTRIBUTION_MAX_N,
};
pub use reach::{reach_digraph, reach_history, ReachDigraph, REACH_MAX_N};
pub use weight::{prepare, Judgement, Step, Weight, MAX_WIDTH};

use thiserror::Error;

use crate::network::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("start pair ({0}, {1}) must be two distinct labels of the ground set")]
    BadPair(Label, Label),
    #[error("division check requires even n, got {0}")]
    OddSize(u32),
    #[error("ground set of {n} points exceeds the limit of {max}")]
    TooLarge { n: u32, max: u32 },
    #[error("network has irrational probabilities; exact mode unavailable")]
    NotRational,
}
