//! Step-by-step traces of the three lower-bound invariants on concrete
//! networks.
//!
//! * rank: `f(t) = |S(t)| + rank M(t)` for the pair matrix `M(t)` of a start
//!   pair, where `S(t)` holds the labels whose row or column of `M(t)` is
//!   nonzero. Rises by at most one per swap.
//! * transversal: `g(t)`, the heaviest product of marginal entries along a
//!   permutation. Drops by at most a factor four per swap.
//! * clique: `F(t) = f1 + f2/2` on the reachability digraph, with `f1` the
//!   covered vertices and `f2` the largest nice clique. Rises by at most one
//!   per transposition.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use pathfinding::prelude::{kuhn_munkres, Matrix};
use serde::Serialize;
use thiserror::Error;

use crate::network::{Label, Network, TranspositionSeq};
use crate::numeric::{Interval, Rational, DEFAULT_PRECISION_BITS};
use crate::verify::{prepare, MarginalMatrix, Mode, PairDistribution, ReachDigraph, Step, Weight};

/// Largest ground set for exact transversal maximisation over all
/// permutations; above it an assignment solver picks the transversal.
pub const TRANSVERSAL_EXACT_MAX_N: u32 = 8;

/// Largest ground set accepted by the clique certificate.
pub const CLIQUE_MAX_N: u32 = 16;

/// Slack, in `log2` units, for the transversal step bound when the trace is
/// not exact.
pub const LOG_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("the rank certificate needs rational probabilities; this network has irrational ones")]
    NotRational,
    #[error("ground set of {n} points exceeds the limit of {max}")]
    TooLarge { n: u32, max: u32 },
    #[error("start pair ({0}, {1}) must be two distinct labels of the ground set")]
    BadPair(Label, Label),
}

/// Pass/fail of a trace, with the offending steps.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceVerdict {
    pub pass: bool,
    pub violations: Vec<String>,
}

impl TraceVerdict {
    fn from_violations(violations: Vec<String>) -> Self {
        TraceVerdict {
            pass: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Endpoints<T> {
    pub initial: T,
    #[serde(rename = "final")]
    pub last: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankStep {
    pub t: usize,
    pub support: usize,
    pub rank: usize,
    pub f: usize,
    pub increment: Option<i64>,
    /// `M(t) = P M(t-1) P + X` held exactly for this step's swap.
    pub identity_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankTrace {
    pub invariant: &'static str,
    pub n: u32,
    pub start: [Label; 2],
    pub steps: Vec<RankStep>,
    pub endpoints: Endpoints<usize>,
    pub verdict: TraceVerdict,
    /// `f(l) - f(0)`: no network reaching the final matrix is shorter.
    pub implied_lower_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransversalStep {
    pub t: usize,
    pub g: String,
    pub log2_g: f64,
    pub alpha: Vec<Label>,
    /// `log2 g(t) - log2 g(t-1)`; the bound requires at least `-2`.
    pub increment_log2: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransversalTrace {
    pub invariant: &'static str,
    pub n: u32,
    pub mode: Mode,
    /// `true` when `g` is the exact maximum at every step; `false` when an
    /// assignment solver on floating-point logarithms chose the transversal.
    pub exhaustive: bool,
    pub steps: Vec<TransversalStep>,
    pub endpoints: Endpoints<String>,
    /// Final `g` equals `n^(-n)`, as for every strong `(1, n)`-shuffle.
    pub final_is_uniform: bool,
    pub verdict: TraceVerdict,
    /// `⌈log4(g(0) / g(l))⌉`.
    pub implied_lower_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliqueStep {
    pub t: usize,
    pub f1: u32,
    pub f2: u32,
    #[serde(rename = "F")]
    pub big_f: f64,
    pub increment: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliqueTrace {
    pub invariant: &'static str,
    pub n: u32,
    pub steps: Vec<CliqueStep>,
    pub endpoints: Endpoints<f64>,
    /// Every ordered pair is reachable at the end.
    pub complete: bool,
    pub verdict: TraceVerdict,
    /// `⌈F(l) - F(0)⌉`.
    pub implied_lower_bound: u64,
}

macro_rules! to_json {
    ($($t:ty),*) => {$(
        impl $t {
            pub fn to_json(&self) -> String {
                serde_json::to_string_pretty(self).expect("trace serializes")
            }
        }
    )*};
}
to_json!(RankTrace, TransversalTrace, CliqueTrace);

// ---------------------------------------------------------------- rank

/// Rank trace of the pair matrix for the start pair `(x, y)`.
pub fn rank_certificate(net: &Network, x: Label, y: Label) -> Result<RankTrace, CertificateError> {
    let n = net.n();
    if x == y || x == 0 || y == 0 || x > n || y > n {
        return Err(CertificateError::BadPair(x, y));
    }
    let steps = prepare::<Rational>(net, DEFAULT_PRECISION_BITS).ok_or(CertificateError::NotRational)?;
    let size = n as usize;
    let mut d = PairDistribution::<Rational>::point(size, x, y);
    let mut m = snapshot(&d);
    let mut trace = vec![rank_step(0, &m, size, None, true)];
    let mut violations = Vec::new();
    for (t, step) in steps.iter().enumerate() {
        d.apply(step);
        let next = snapshot(&d);
        let identity = pmp_plus_x(&m, size, step) == next;
        let prev_f = trace.last().expect("nonempty").f;
        let row = rank_step(t + 1, &next, size, Some(prev_f), identity);
        if !identity {
            violations.push(format!("step {}: M' != PMP + X", t + 1));
        }
        if row.increment.is_some_and(|inc| inc > 1) {
            violations.push(format!("step {}: f rose by {}", t + 1, row.increment.unwrap()));
        }
        trace.push(row);
        m = next;
    }
    let (first, last) = (trace[0].f, trace.last().expect("nonempty").f);
    Ok(RankTrace {
        invariant: "rank",
        n,
        start: [x, y],
        endpoints: Endpoints {
            initial: first,
            last,
        },
        implied_lower_bound: last.saturating_sub(first) as u64,
        steps: trace,
        verdict: TraceVerdict::from_violations(violations),
    })
}

fn snapshot(d: &PairDistribution<Rational>) -> Vec<Rational> {
    let n = d.n() as Label;
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| d.get(i, j).clone())
        .collect()
}

fn rank_step(t: usize, m: &[Rational], n: usize, prev_f: Option<usize>, identity: bool) -> RankStep {
    let support = (0..n)
        .filter(|&i| (0..n).any(|j| !m[i * n + j].is_zero() || !m[j * n + i].is_zero()))
        .count();
    let rank = exact_rank(m, n);
    let f = support + rank;
    RankStep {
        t,
        support,
        rank,
        f,
        increment: prev_f.map(|p| f as i64 - p as i64),
        identity_holds: identity,
    }
}

fn scaled(c: &Rational, x: &Rational) -> Rational {
    if x.is_zero() || c.is_zero() {
        Rational::zero()
    } else if c.is_one() {
        x.clone()
    } else {
        c * x
    }
}

/// `P M P + X` for the swap `step`, computed from the sparse matrix `P`
/// (identity outside rows and columns `a`, `b`) independently of the
/// propagation engine.
fn pmp_plus_x(m: &[Rational], n: usize, step: &Step<Rational>) -> Vec<Rational> {
    let (a, b) = (step.a, step.b);
    let one = Rational::one();
    let p_row = |i: usize| -> Vec<(usize, &Rational)> {
        if i == a {
            vec![(a, &step.keep), (b, &step.p)]
        } else if i == b {
            vec![(b, &step.keep), (a, &step.p)]
        } else {
            vec![(i, &one)]
        }
    };
    let mut pm = vec![Rational::zero(); n * n];
    for i in 0..n {
        for (k, c) in p_row(i) {
            for j in 0..n {
                let term = scaled(c, &m[k * n + j]);
                if !term.is_zero() {
                    pm[i * n + j] = &pm[i * n + j] + &term;
                }
            }
        }
    }
    // P is symmetric, so column j of P is row j.
    let mut out = vec![Rational::zero(); n * n];
    for j in 0..n {
        for (l, c) in p_row(j) {
            for i in 0..n {
                let term = scaled(c, &pm[i * n + l]);
                if !term.is_zero() {
                    out[i * n + j] = &out[i * n + j] + &term;
                }
            }
        }
    }
    let s = &(&step.p * &step.keep) * &(&m[a * n + b] + &m[b * n + a]);
    if !s.is_zero() {
        out[a * n + a] = &out[a * n + a] - &s;
        out[b * n + b] = &out[b * n + b] - &s;
        out[a * n + b] = &out[a * n + b] + &s;
        out[b * n + a] = &out[b * n + a] + &s;
    }
    out
}

/// Exact rank of a square rational matrix: clear denominators, then
/// fraction-free (Bareiss) elimination with full pivoting.
pub fn exact_rank(m: &[Rational], n: usize) -> usize {
    let rows: Vec<usize> = (0..n).filter(|&i| (0..n).any(|j| !m[i * n + j].is_zero())).collect();
    let cols: Vec<usize> = (0..n).filter(|&j| (0..n).any(|i| !m[i * n + j].is_zero())).collect();
    if rows.is_empty() {
        return 0;
    }
    let lcm = rows
        .iter()
        .flat_map(|&i| cols.iter().map(move |&j| m[i * n + j].denom()))
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|&i| {
            cols.iter()
                .map(|&j| {
                    let r = &m[i * n + j];
                    r.numer() * (&lcm / r.denom())
                })
                .collect()
        })
        .collect();
    bareiss_rank(&mut a)
}

fn bareiss_rank(a: &mut [Vec<BigInt>]) -> usize {
    let (r, c) = (a.len(), a.first().map_or(0, Vec::len));
    let mut prev = BigInt::one();
    let mut rank = 0;
    for k in 0..r.min(c) {
        let Some((pi, pj)) = (k..r)
            .flat_map(|i| (k..c).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..c {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    rank
}

// ---------------------------------------------------------- transversal

/// Ordering used to pick the heavier of two transversal weights.
trait Heavier: Weight {
    fn heavier(&self, other: &Self) -> Ordering;
    fn log2(&self) -> f64;
    /// `4 * self >= other`, exactly where possible.
    fn quarter_bound(&self, other: &Self) -> bool;
}

impl Heavier for Rational {
    fn heavier(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn log2(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = |x: &BigInt| {
            let shift = x.bits().saturating_sub(60);
            let top: BigInt = x >> shift;
            top.to_f64().expect("at most 60 bits").log2() + shift as f64
        };
        bits(&self.numer().abs()) - bits(self.denom())
    }

    fn quarter_bound(&self, other: &Self) -> bool {
        &Rational::from_integer(4) * self >= *other
    }
}

impl Heavier for Interval {
    fn heavier(&self, other: &Self) -> Ordering {
        self.midpoint().total_cmp(&other.midpoint())
    }

    fn log2(&self) -> f64 {
        self.midpoint().log2()
    }

    fn quarter_bound(&self, other: &Self) -> bool {
        self.hi().log2() >= other.lo().log2() - 2.0 - LOG_TOLERANCE
    }
}

/// Heaviest-transversal trace of the single-element marginals.
pub fn transversal_certificate(net: &Network) -> TransversalTrace {
    match prepare::<Rational>(net, DEFAULT_PRECISION_BITS) {
        Some(steps) => transversal_with(net.n(), &steps, Mode::Exact),
        None => {
            let steps = prepare::<Interval>(net, DEFAULT_PRECISION_BITS).expect("intervals exist");
            transversal_with(net.n(), &steps, Mode::Interval)
        }
    }
}

fn transversal_with<W: Heavier>(n: u32, steps: &[Step<W>], mode: Mode) -> TransversalTrace {
    let size = n as usize;
    let exhaustive = n <= TRANSVERSAL_EXACT_MAX_N;
    let mut m = MarginalMatrix::<W>::identity(size);
    // floating-point shadow of `m`, only used to steer the assignment solver
    let mut shadow: Vec<f64> = (0..size * size)
        .map(|k| if k / size == k % size { 1.0 } else { 0.0 })
        .collect();
    let identity: Vec<usize> = (0..size).collect();
    let (mut g, mut alpha) = (product(&m, &identity), identity);
    let starts_at_one = same_value(&g, &W::one());
    let mut rows = vec![transversal_row(0, &g, &alpha, None)];
    let mut violations = Vec::new();
    for (t, step) in steps.iter().enumerate() {
        m.apply(step);
        let p = step.p.approx();
        for row in 0..size {
            let (ia, ib) = (row * size + step.a, row * size + step.b);
            let (va, vb) = (shadow[ia], shadow[ib]);
            shadow[ia] = (1.0 - p) * va + p * vb;
            shadow[ib] = (1.0 - p) * vb + p * va;
        }
        let (next_g, next_alpha) = if exhaustive {
            heaviest_exhaustive(&m)
        } else {
            // the assignment optimum, plus the two transversals the step
            // bound is proved with, so the bound survives solver rounding
            let swapped: Vec<usize> = alpha
                .iter()
                .map(|&y| match y {
                    y if y == step.a => step.b,
                    y if y == step.b => step.a,
                    y => y,
                })
                .collect();
            [assignment(&shadow, size), alpha.clone(), swapped]
                .into_iter()
                .map(|cand| (product(&m, &cand), cand))
                .max_by(|x, y| x.0.heavier(&y.0))
                .expect("three candidates")
        };
        if !next_g.quarter_bound(&g) {
            violations.push(format!("step {}: g fell by more than a factor 4", t + 1));
        }
        let inc = next_g.log2() - g.log2();
        rows.push(transversal_row(t + 1, &next_g, &next_alpha, Some(inc)));
        g = next_g;
        alpha = next_alpha;
    }
    if !starts_at_one {
        violations.push("g(0) != 1".to_string());
    }
    let uniform = W::from_rational(&Rational::new(1, BigInt::from(n).pow(n)).expect("n >= 1"));
    let final_is_uniform = same_value(&g, &uniform);
    let drop = -g.log2() / 2.0;
    let implied_lower_bound = if drop.is_finite() {
        (drop - 1e-9).ceil().max(0.0) as u64
    } else {
        0
    };
    TransversalTrace {
        invariant: "transversal",
        n,
        mode,
        exhaustive: exhaustive && W::EXACT,
        endpoints: Endpoints {
            initial: rows[0].g.clone(),
            last: rows.last().expect("nonempty").g.clone(),
        },
        steps: rows,
        final_is_uniform,
        verdict: TraceVerdict::from_violations(violations),
        implied_lower_bound,
    }
}

fn same_value<W: Heavier>(x: &W, y: &W) -> bool {
    if W::EXACT {
        x.heavier(y) == Ordering::Equal
    } else {
        (x.log2() - y.log2()).abs() <= LOG_TOLERANCE
    }
}

fn transversal_row<W: Heavier>(t: usize, g: &W, alpha: &[usize], inc: Option<f64>) -> TransversalStep {
    TransversalStep {
        t,
        g: g.to_string(),
        log2_g: g.log2(),
        alpha: alpha.iter().map(|&y| y as Label + 1).collect(),
        increment_log2: inc,
    }
}

fn product<W: Weight>(m: &MarginalMatrix<W>, alpha: &[usize]) -> W {
    alpha
        .iter()
        .enumerate()
        .fold(W::one(), |acc, (x, &y)| acc.mul(m.get(x as Label + 1, y as Label + 1)))
}

/// Exact maximum over all permutations by dynamic programming over the set
/// of used columns (rows are assigned in order).
fn heaviest_exhaustive<W: Heavier>(m: &MarginalMatrix<W>) -> (W, Vec<usize>) {
    let n = m.n();
    let full = (1usize << n) - 1;
    let mut best: Vec<Option<(W, usize)>> = vec![None; 1 << n];
    best[0] = Some((W::one(), usize::MAX));
    for mask in 0..full {
        let Some((w, _)) = best[mask].clone() else {
            continue;
        };
        let row = mask.count_ones() as Label + 1;
        for col in (0..n).filter(|c| mask >> c & 1 == 0) {
            let entry = m.get(row, col as Label + 1);
            if entry.is_zero() {
                continue;
            }
            let cand = w.mul(entry);
            let slot = &mut best[mask | 1 << col];
            if slot.as_ref().is_none_or(|(cur, _)| cand.heavier(cur) == Ordering::Greater) {
                *slot = Some((cand, col));
            }
        }
    }
    // every marginal matrix is doubly stochastic, so some permutation has a
    // positive product (Birkhoff)
    let (g, _) = best[full].clone().expect("positive transversal exists");
    let mut alpha = vec![0; n];
    let mut mask = full;
    for row in (0..n).rev() {
        let (_, col) = best[mask].as_ref().expect("on the argmax path");
        alpha[row] = *col;
        mask &= !(1 << col);
    }
    (g, alpha)
}

/// Maximum-weight assignment on `log2` of the floating-point marginals.
fn assignment(shadow: &[f64], n: usize) -> Vec<usize> {
    const SCALE: f64 = (1u64 << 40) as f64;
    const ABSENT: i64 = -(1 << 52);
    let weights = Matrix::from_fn(n, n, |(i, j)| {
        let v = shadow[i * n + j];
        if v > 0.0 {
            (v.log2() * SCALE).round() as i64
        } else {
            ABSENT
        }
    });
    kuhn_munkres(&weights).1
}

// ---------------------------------------------------------------- clique

/// `F = f1 + f2/2` along the prefixes of a transposition sequence.
pub fn clique_certificate(seq: &TranspositionSeq) -> Result<CliqueTrace, CertificateError> {
    let n = seq.n();
    if n > CLIQUE_MAX_N {
        return Err(CertificateError::TooLarge {
            n,
            max: CLIQUE_MAX_N,
        });
    }
    let mut g = ReachDigraph::start(n);
    let mut rows = vec![clique_row(0, &g, None)];
    let mut violations = Vec::new();
    for (t, &(a, b)) in seq.pairs().iter().enumerate() {
        g.apply(a, b);
        let prev = rows.last().expect("nonempty").big_f;
        let row = clique_row(t + 1, &g, Some(prev));
        if row.increment.is_some_and(|inc| inc > 1.0) {
            violations.push(format!("step {}: F rose by {}", t + 1, row.increment.unwrap()));
        }
        rows.push(row);
    }
    let (first, last) = (rows[0].big_f, rows.last().expect("nonempty").big_f);
    Ok(CliqueTrace {
        invariant: "clique",
        n,
        endpoints: Endpoints {
            initial: first,
            last,
        },
        complete: g.is_complete(),
        steps: rows,
        verdict: TraceVerdict::from_violations(violations),
        implied_lower_bound: (last - first).ceil().max(0.0) as u64,
    })
}

fn clique_row(t: usize, g: &ReachDigraph, prev: Option<f64>) -> CliqueStep {
    let f1 = g.covered().count_ones();
    let f2 = max_nice_clique(g);
    // halves are exact in f64
    let big_f = f1 as f64 + f2 as f64 / 2.0;
    CliqueStep {
        t,
        f1,
        f2,
        big_f,
        increment: prev.map(|p| big_f - p),
    }
}

/// Size of the largest set of vertices, each with positive in- and
/// out-degree, any two joined by an edge in at least one direction.
pub fn max_nice_clique(g: &ReachDigraph) -> u32 {
    let n = g.n();
    let ins: Vec<u64> = (1..=n).map(|v| g.in_mask(v)).collect();
    let eligible = (1..=n)
        .filter(|&v| g.out_mask(v) != 0 && ins[v as usize - 1] != 0)
        .fold(0u64, |acc, v| acc | 1 << (v - 1));
    let adj: Vec<u64> = (1..=n)
        .map(|v| (g.out_mask(v) | ins[v as usize - 1]) & eligible)
        .collect();
    let mut best = 0;
    bron_kerbosch(&adj, 0, eligible, 0, &mut best);
    best
}

fn bron_kerbosch(adj: &[u64], size: u32, mut cand: u64, mut excluded: u64, best: &mut u32) {
    if cand == 0 {
        if excluded == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + cand.count_ones() <= *best {
        return;
    }
    let pivot = (cand | excluded).trailing_zeros() as usize;
    let mut todo = cand & !adj[pivot];
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        let bit = 1u64 << v;
        bron_kerbosch(adj, size + 1, cand & adj[v], excluded & adj[v], best);
        cand &= !bit;
        excluded |= bit;
        todo &= !bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ProbScalar;

    fn rat_matrix(rows: &[&[i64]]) -> Vec<Rational> {
        rows.iter()
            .flat_map(|r| r.iter().map(|&x| Rational::from_integer(x)))
            .collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(exact_rank(&rat_matrix(&[&[0, 0], &[0, 0]]), 2), 0);
        assert_eq!(exact_rank(&rat_matrix(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(exact_rank(&rat_matrix(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]), 3), 2);
        assert_eq!(exact_rank(&rat_matrix(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]), 3), 3);
        let halves = vec![
            Rational::ratio(1, 2),
            Rational::ratio(1, 3),
            Rational::ratio(1, 4),
            Rational::ratio(1, 6),
        ];
        assert_eq!(exact_rank(&halves, 2), 1);
    }

    #[test]
    fn empty_network_rank_trace() {
        let trace = rank_certificate(&Network::empty(4), 1, 2).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert_eq!((trace.steps[0].support, trace.steps[0].rank, trace.steps[0].f), (2, 1, 3));
    }

    #[test]
    fn fair_swap_transversal_hits_quarter() {
        let net = Network::from_triples(2, [(1, 2, ProbScalar::half())]).unwrap();
        let trace = transversal_certificate(&net);
        assert_eq!(trace.endpoints.initial, "1");
        assert_eq!(trace.endpoints.last, "1/4");
        assert!(trace.verdict.pass && trace.final_is_uniform);
        assert_eq!(trace.implied_lower_bound, 1);
    }

    #[test]
    fn empty_sequence_clique() {
        let trace = clique_certificate(&TranspositionSeq::new(5, vec![]).unwrap()).unwrap();
        assert_eq!(trace.steps[0].f1, 2);
        assert_eq!(trace.steps[0].f2, 0);
        assert_eq!(trace.endpoints.initial, 2.0);
    }

    #[test]
    fn complete_digraph_clique() {
        let trace =
            clique_certificate(&TranspositionSeq::new(2, vec![(1, 2)]).unwrap()).unwrap();
        assert_eq!(trace.endpoints.last, 3.0);
        assert!(trace.complete);
    }

    #[test]
    fn surd_rank_is_refused() {
        let net = crate::constructions::nice_division(4).unwrap();
        assert_eq!(rank_certificate(&net, 1, 2).unwrap_err(), CertificateError::NotRational);
    }
}
