//! Exhaustive search for short reaching sequences.
//!
//! Depth-first over all transpositions, on reachability digraphs packed into
//! a `u64` (one byte per row). States are canonicalised under relabelings of
//! `{3, …, n}` and memoised with the largest remaining depth at which they
//! are known to fail.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::reach2;
use crate::network::{Label, TranspositionSeq};
use crate::verify::check_reachability;

pub const SEARCH_MAX_N: u32 = 7;
pub const SEARCH_MAX_LENGTH: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("exhaustive search supports 2 <= n <= {SEARCH_MAX_N}, got {0}")]
    BadSize(u32),
    #[error("exhaustive search supports length <= {SEARCH_MAX_LENGTH}, got {0}")]
    TooLong(usize),
}

/// Limits for one search.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    /// Give up after visiting this many nodes.
    pub max_nodes: Option<u64>,
    /// Split the first move across this many rayon workers, each with its
    /// own memo table. `0` or `1` searches sequentially with one table.
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "sequence")]
pub enum Outcome {
    /// A sequence of at most the searched length reaches every pair.
    Found(Vec<[Label; 2]>),
    /// No sequence of the searched length reaches every pair.
    Exhausted,
    /// The node budget ran out first.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExhaustReport {
    pub n: u32,
    pub length: usize,
    pub outcome: Outcome,
    pub nodes: u64,
    pub elapsed_ms: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Minimality {
    /// The construction reaches everything and nothing shorter does.
    Minimal,
    /// Something shorter than the construction reaches everything.
    Counterexample,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub n: u32,
    /// `⌈3n/2⌉ - 2`.
    pub target_length: usize,
    pub construction_passes: bool,
    pub exhausted_length: usize,
    pub nodes: u64,
    pub elapsed_ms: f64,
    pub verdict: Minimality,
    pub counterexample: Option<Vec<[Label; 2]>>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A reachability digraph on at most eight vertices: bit `8i + j` is the
/// edge `(i + 1, j + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Packed(pub u64);

const COLUMN: u64 = 0x0101_0101_0101_0101;

impl Packed {
    pub fn start() -> Packed {
        Packed(1 << 1)
    }

    fn row(self, i: usize) -> u64 {
        self.0 >> (8 * i) & 0xff
    }

    /// The column of tail bits for head `j`, moved to head `k`.
    fn column_moved(self, j: usize, k: usize) -> u64 {
        let col = self.0 & (COLUMN << j);
        if k >= j {
            col << (k - j)
        } else {
            col >> (j - k)
        }
    }

    /// The six-bullet update for a transposition of the zero-based `a`, `b`.
    pub fn apply(self, a: usize, b: usize) -> Packed {
        let (bit_a, bit_b) = (1u64 << a, 1u64 << b);
        let (row_a, row_b) = (self.row(a), self.row(b));
        let mut next = self.0;
        next |= (row_b & !bit_a) << (8 * a);
        next |= (row_a & !bit_b) << (8 * b);
        next |= self.column_moved(b, a) & !(0xff << (8 * a));
        next |= self.column_moved(a, b) & !(0xff << (8 * b));
        if row_a & bit_b != 0 || row_b & bit_a != 0 {
            next |= bit_b << (8 * a) | bit_a << (8 * b);
        }
        Packed(next)
    }

    pub fn is_complete(self, n: usize) -> bool {
        (0..n).all(|i| self.row(i) == ((1u64 << n) - 1) & !(1 << i))
    }
}

/// Relabelings of `{3, …, n}` (zero-based `{2, …, n-1}`), each with a table
/// mapping a row byte to its relabelled byte.
struct Symmetries {
    n: usize,
    perms: Vec<(Vec<usize>, [u8; 256])>,
}

impl Symmetries {
    fn new(n: usize) -> Self {
        let mut perms = Vec::new();
        let mut tail: Vec<usize> = (2..n).collect();
        permutations(&mut tail, 0, &mut |t| {
            let perm: Vec<usize> = [0, 1].into_iter().chain(t.iter().copied()).collect();
            let mut table = [0u8; 256];
            for (byte, slot) in table.iter_mut().enumerate() {
                *slot = (0..n)
                    .filter(|&j| byte >> j & 1 == 1)
                    .fold(0u8, |acc, j| acc | 1 << perm[j]);
            }
            perms.push((perm, table));
        });
        Symmetries { n, perms }
    }

    fn canonical(&self, s: Packed) -> u64 {
        self.perms
            .iter()
            .map(|(perm, table)| {
                (0..self.n).fold(0u64, |acc, i| {
                    acc | (table[s.row(i) as usize] as u64) << (8 * perm[i])
                })
            })
            .min()
            .expect("identity is always present")
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

struct Searcher<'a> {
    n: usize,
    moves: &'a [(usize, usize)],
    symmetries: &'a Symmetries,
    memo: HashMap<u64, usize>,
    nodes: u64,
    max_nodes: Option<u64>,
    aborted: bool,
}

impl Searcher<'_> {
    /// A sequence of at most `remaining` moves completing `state`, if any.
    fn dfs(&mut self, state: Packed, remaining: usize, path: &mut Vec<(usize, usize)>) -> bool {
        self.nodes += 1;
        if self.max_nodes.is_some_and(|m| self.nodes > m) {
            self.aborted = true;
            return false;
        }
        if state.is_complete(self.n) {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        let key = self.symmetries.canonical(state);
        if self.memo.get(&key).is_some_and(|&d| d >= remaining) {
            return false;
        }
        for &(a, b) in self.moves {
            let next = state.apply(a, b);
            if next == state {
                continue;
            }
            path.push((a, b));
            if self.dfs(next, remaining - 1, path) {
                return true;
            }
            path.pop();
            if self.aborted {
                return false;
            }
        }
        let slot = self.memo.entry(key).or_insert(0);
        *slot = (*slot).max(remaining);
        false
    }
}

fn check_limits(n: u32, length: usize) -> Result<(), SearchError> {
    if !(2..=SEARCH_MAX_N).contains(&n) {
        return Err(SearchError::BadSize(n));
    }
    if length > SEARCH_MAX_LENGTH {
        return Err(SearchError::TooLong(length));
    }
    Ok(())
}

/// Decide whether some sequence of `length` transpositions on `[n]` reaches
/// every ordered pair from `(1, 2)`.
pub fn exhaust_reach2(n: u32, length: usize, opts: SearchOptions) -> Result<ExhaustReport, SearchError> {
    check_limits(n, length)?;
    let clock = Instant::now();
    let size = n as usize;
    let moves: Vec<(usize, usize)> = (0..size)
        .flat_map(|a| (a + 1..size).map(move |b| (a, b)))
        .collect();
    let symmetries = Symmetries::new(size);
    let searcher = || Searcher {
        n: size,
        moves: &moves,
        symmetries: &symmetries,
        memo: HashMap::new(),
        nodes: 0,
        max_nodes: opts.max_nodes,
        aborted: false,
    };
    let start = Packed::start();
    let (found, nodes, aborted) = if opts.jobs <= 1 || length == 0 || start.is_complete(size) {
        let mut s = searcher();
        let mut path = Vec::new();
        let ok = s.dfs(start, length, &mut path);
        (ok.then_some(path), s.nodes, s.aborted)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        let branches: Vec<_> = pool.install(|| {
            moves
                .par_iter()
                .map(|&(a, b)| {
                    let mut s = searcher();
                    let next = start.apply(a, b);
                    let mut path = vec![(a, b)];
                    let ok = next != start && s.dfs(next, length - 1, &mut path);
                    (ok.then_some(path), s.nodes, s.aborted)
                })
                .collect()
        });
        let nodes = 1 + branches.iter().map(|b| b.1).sum::<u64>();
        let aborted = branches.iter().any(|b| b.2);
        let found = branches.into_iter().find_map(|b| b.0);
        (found, nodes, aborted)
    };
    let outcome = match (found, aborted) {
        (Some(path), _) => Outcome::Found(
            path.iter()
                .map(|&(a, b)| [a as Label + 1, b as Label + 1])
                .collect(),
        ),
        (None, true) => Outcome::Inconclusive,
        (None, false) => Outcome::Exhausted,
    };
    Ok(ExhaustReport {
        n,
        length,
        outcome,
        nodes,
        elapsed_ms: clock.elapsed().as_secs_f64() * 1e3,
    })
}

/// `⌈3n/2⌉ - 2`.
pub fn reach_target(n: u32) -> usize {
    (3 * n as usize).div_ceil(2) - 2
}

/// Check the construction at `⌈3n/2⌉ - 2` and exhaust one step shorter.
pub fn certify_minimality(n: u32, opts: SearchOptions) -> Result<SearchReport, SearchError> {
    check_limits(n, 0)?;
    let clock = Instant::now();
    let target = reach_target(n);
    let construction = reach2(n).expect("n >= 2 has a construction");
    let construction_passes =
        construction.len() == target && check_reachability(&construction).pass;
    let shorter = target.saturating_sub(1);
    let report = exhaust_reach2(n, shorter, opts)?;
    let (verdict, counterexample) = match report.outcome {
        Outcome::Found(seq) => (Minimality::Counterexample, Some(seq)),
        Outcome::Inconclusive => (Minimality::Inconclusive, None),
        Outcome::Exhausted if construction_passes => (Minimality::Minimal, None),
        Outcome::Exhausted => (Minimality::Inconclusive, None),
    };
    Ok(SearchReport {
        n,
        target_length: target,
        construction_passes,
        exhausted_length: shorter,
        nodes: report.nodes,
        elapsed_ms: clock.elapsed().as_secs_f64() * 1e3,
        verdict,
        counterexample,
    })
}

/// The found sequence as a [`TranspositionSeq`].
pub fn outcome_sequence(n: u32, outcome: &Outcome) -> Option<TranspositionSeq> {
    match outcome {
        Outcome::Found(pairs) => Some(
            TranspositionSeq::new(n, pairs.iter().map(|p| (p[0], p[1])).collect())
                .expect("search emits valid pairs"),
        ),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::ReachDigraph;

    fn unpack(s: Packed, n: u32) -> Vec<(Label, Label)> {
        (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| s.0 >> (8 * (i - 1) + (j - 1)) & 1 == 1)
            .collect()
    }

    #[test]
    fn packed_update_matches_digraph() {
        let n = 6u32;
        let moves: Vec<(u32, u32)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        let mut state = 0x2545f4914f6cdd1du64;
        for _ in 0..200 {
            let mut packed = Packed::start();
            let mut g = ReachDigraph::start(n);
            for _ in 0..8 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let (a, b) = moves[(state % moves.len() as u64) as usize];
                packed = packed.apply(a as usize - 1, b as usize - 1);
                g.apply(a, b);
                assert_eq!(unpack(packed, n), g.edges().collect::<Vec<_>>());
                assert_eq!(packed.is_complete(n as usize), g.is_complete());
            }
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let sym = Symmetries::new(5);
        let s = Packed::start().apply(0, 2).apply(1, 3);
        let t = Packed::start().apply(0, 4).apply(1, 2);
        assert_eq!(sym.canonical(s), sym.canonical(t));
        assert_eq!(sym.perms.len(), 6);
    }

    #[test]
    fn two_points() {
        let opts = SearchOptions::default();
        assert_eq!(exhaust_reach2(2, 0, opts).unwrap().outcome, Outcome::Exhausted);
        assert_eq!(
            exhaust_reach2(2, 1, opts).unwrap().outcome,
            Outcome::Found(vec![[1, 2]])
        );
    }

    #[test]
    fn limits() {
        let opts = SearchOptions::default();
        assert_eq!(exhaust_reach2(8, 3, opts), Err(SearchError::BadSize(8)));
        assert_eq!(exhaust_reach2(4, 10, opts), Err(SearchError::TooLong(10)));
    }

    #[test]
    fn node_budget_is_inconclusive() {
        let opts = SearchOptions {
            max_nodes: Some(10),
            jobs: 0,
        };
        assert_eq!(exhaust_reach2(5, 5, opts).unwrap().outcome, Outcome::Inconclusive);
    }
}
