//! Lazy-transposition shuffle networks: construction, exact and
//! interval-certified verification, lower-bound certificates and exhaustive
//! reachability search.

pub mod numeric;
pub mod network;
pub mod verify;
pub mod constructions;
pub mod certificates;
pub mod search;
pub mod cli;
