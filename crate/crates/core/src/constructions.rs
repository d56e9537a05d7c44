//! Builders for every network family, each checked against its length bound.
//!
//! All networks are returned in execution order (index 0 acts first).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::network::{Label, LazySwap, Network, NetworkError, Relabeling, TranspositionSeq};
use crate::numeric::{solve_division_q, NumericError, ProbScalar, Rational};
use crate::verify::reach_digraph;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("{family} requires even n, got {n}")]
    OddSize { family: &'static str, n: u32 },
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("construction failed its own validation: {0}")]
    Validation(String),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

/// The families a builder exists for. `Hypercube` is parametrised by its
/// ground-set size, which must be a power of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Placement,
    KTuple(u32),
    U2,
    Hypercube,
    Strong1,
    Reach2,
    Division,
    Strong2,
}

impl Family {
    /// The families of the bounds table, in table order.
    pub const TABLE: [Family; 5] = [
        Family::U2,
        Family::Strong1,
        Family::Reach2,
        Family::Division,
        Family::Strong2,
    ];

    pub fn name(&self) -> String {
        match self {
            Family::Placement => "placement".into(),
            Family::KTuple(k) => format!("ktuple:{k}"),
            Family::U2 => "u2".into(),
            Family::Hypercube => "hypercube".into(),
            Family::Strong1 => "strong1".into(),
            Family::Reach2 => "reach2".into(),
            Family::Division => "division".into(),
            Family::Strong2 => "strong2".into(),
        }
    }

    /// Whether the family has a member on `[1, n]`.
    pub fn accepts(&self, n: u32) -> bool {
        match self {
            Family::Placement | Family::Strong1 | Family::Strong2 => n >= 1,
            Family::KTuple(k) => *k >= 1 && *k <= n,
            Family::U2 | Family::Reach2 => n >= 2,
            Family::Hypercube => n.is_power_of_two(),
            Family::Division => n >= 2 && n % 2 == 0,
        }
    }

    /// Build the family member on `[1, n]`.
    pub fn build(&self, n: u32) -> Result<Built> {
        Ok(match self {
            Family::Placement => {
                check_min("placement", n, 1)?;
                Built::Network(placement_chain(n, n)?)
            }
            Family::KTuple(k) => Built::Network(k_tuple_shuffle(n, *k)?),
            Family::U2 => Built::Network(u2_shuffle(n)?),
            Family::Hypercube => {
                if !n.is_power_of_two() {
                    return Err(ConstructionError::InvalidParameter {
                        family: "hypercube",
                        reason: format!("n must be a power of two, got {n}"),
                    });
                }
                Built::Network(hypercube_strong1(n.trailing_zeros())?)
            }
            Family::Strong1 => Built::Network(strong1(n)?),
            Family::Reach2 => Built::Seq(reach2(n)?),
            Family::Division => Built::Network(nice_division(n)?),
            Family::Strong2 => Built::Network(strong2(n)?),
        })
    }

    /// The length bound for size `n`.
    pub fn ledger(&self, n: u32, length: usize) -> BoundLedger {
        let (bound, tight) = match self {
            Family::Placement => (n as u64 - 1, true),
            Family::KTuple(k) => {
                let (n, k) = (n as u64, *k as u64);
                (k * n - k * (k + 1) / 2, true)
            }
            Family::U2 => (2 * n as u64 - 3, true),
            Family::Hypercube => {
                let t = n.trailing_zeros() as u64;
                (if t == 0 { 0 } else { t << (t - 1) }, true)
            }
            Family::Strong1 => (floor_bound(0.5 * nf(n) * log2(n) + 2.0 * nf(n)), false),
            Family::Reach2 => ((3 * n as u64).div_ceil(2) - 2, true),
            Family::Division => (floor_bound(3.0 * nf(n) * log2(n)), false),
            Family::Strong2 => {
                if n < 2 {
                    (0, true)
                } else {
                    (floor_bound(4.0 * nf(n) * log2(n) * log2(n)), false)
                }
            }
        };
        BoundLedger {
            family: self.name(),
            n,
            length,
            bound,
            tight,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Family {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || ConstructionError::UnknownFamily(s.to_string());
        Ok(match s {
            "placement" => Family::Placement,
            "u2" => Family::U2,
            "hypercube" => Family::Hypercube,
            "strong1" => Family::Strong1,
            "reach2" => Family::Reach2,
            "division" => Family::Division,
            "strong2" => Family::Strong2,
            _ => {
                let k = s.strip_prefix("ktuple:").ok_or_else(unknown)?;
                Family::KTuple(k.parse().map_err(|_| unknown())?)
            }
        })
    }
}

fn nf(n: u32) -> f64 {
    n as f64
}

fn log2(n: u32) -> f64 {
    (n as f64).log2()
}

fn floor_bound(x: f64) -> u64 {
    // the formulas are either integers at powers of two or irrational
    (x + 1e-9).floor() as u64
}

/// A built family member: a probabilistic network, or a plain transposition
/// sequence for the reachability family.
#[derive(Clone, Debug)]
pub enum Built {
    Network(Network),
    Seq(TranspositionSeq),
}

impl Built {
    pub fn n(&self) -> u32 {
        match self {
            Built::Network(net) => net.n(),
            Built::Seq(seq) => seq.n(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Built::Network(net) => net.len(),
            Built::Seq(seq) => seq.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self) -> Vec<u8> {
        match self {
            Built::Network(net) => net.encode(),
            Built::Seq(seq) => seq.encode(),
        }
    }

    /// Conventional file extension for the encoded form.
    pub fn extension(&self) -> &'static str {
        match self {
            Built::Network(_) => "shuffle.json",
            Built::Seq(_) => "reach.json",
        }
    }
}

/// Produced length of a family member next to its length bound.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BoundLedger {
    pub family: String,
    pub n: u32,
    pub length: usize,
    /// Largest integer not exceeding the bound formula.
    pub bound: u64,
    /// The construction meets the bound with equality.
    pub tight: bool,
}

impl BoundLedger {
    pub fn holds(&self) -> bool {
        if self.tight {
            self.length as u64 == self.bound
        } else {
            self.length as u64 <= self.bound
        }
    }
}

fn enforce(family: Family, n: u32, length: usize) {
    let ledger = family.ledger(n, length);
    assert!(ledger.holds(), "length bound violated: {ledger:?}");
}

fn check_min(family: &'static str, n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(ConstructionError::InvalidParameter {
            family,
            reason: format!("n must be at least {min}, got {n}"),
        });
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    KTuple(u32, u32),
    Hypercube(u32),
    Strong1(u32),
    Division(u32),
    Strong2(u32),
}

fn cache() -> &'static Mutex<HashMap<Key, Arc<Network>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Network>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn memo(key: Key, build: impl FnOnce() -> Result<Network>) -> Result<Network> {
    if let Some(net) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(Network::clone(net));
    }
    // built outside the lock: recursive builders take it again
    let net = build()?;
    cache()
        .lock()
        .expect("cache poisoned")
        .insert(key, Arc::new(net.clone()));
    Ok(net)
}

fn swap(a: Label, b: Label, p: ProbScalar) -> LazySwap {
    LazySwap::new(a, b, p).expect("builders emit distinct endpoints")
}

fn chain(pieces: &[Network]) -> Result<Network> {
    let n = pieces[0].n();
    let mut swaps = Vec::new();
    for piece in pieces {
        if piece.n() != n {
            return Err(NetworkError::SizeMismatch(n, piece.n()).into());
        }
        swaps.extend_from_slice(piece.swaps());
    }
    Ok(Network::new(n, swaps)?)
}

/// Moves `x` to a uniformly random position of `[n]` with `n - 1` swaps.
///
/// The swaps follow `x` through the other labels in decreasing order. The
/// `i`-th swap moves it on with probability `(n - i) / (n - i + 1)`.
pub fn placement_chain(n: u32, x: Label) -> Result<Network> {
    if n == 0 || x == 0 || x > n {
        return Err(ConstructionError::InvalidParameter {
            family: "placement",
            reason: format!("need 1 <= x <= n, got x = {x}, n = {n}"),
        });
    }
    let mut prev = x;
    let mut swaps = Vec::with_capacity(n as usize - 1);
    for (i, next) in (1..=n).rev().filter(|&y| y != x).enumerate() {
        let remaining = (n - 1 - i as u32) as i64;
        swaps.push(swap(prev, next, ProbScalar::rat(remaining, remaining + 1)?));
        prev = next;
    }
    let net = Network::new(n, swaps)?;
    enforce(Family::Placement, n, net.len());
    Ok(net)
}

/// A `(k, n)`-shuffle for the tuple of top labels `(n - k + 1, …, n)`.
///
/// Shuffles the first `k - 1` of them over `[n - 1]`, then places `n`.
pub fn k_tuple_shuffle(n: u32, k: u32) -> Result<Network> {
    if k == 0 || k > n {
        return Err(ConstructionError::InvalidParameter {
            family: "ktuple",
            reason: format!("need 1 <= k <= n, got k = {k}, n = {n}"),
        });
    }
    memo(Key::KTuple(n, k), || {
        let place = placement_chain(n, n)?;
        let net = if k == 1 {
            place
        } else {
            k_tuple_shuffle(n - 1, k - 1)?.embed(n)?.concat(&place)?
        };
        enforce(Family::KTuple(k), n, net.len());
        Ok(net)
    })
}

/// A `(2, n)`-shuffle for the pair `(1, 2)`, of length `2n - 3`.
pub fn u2_shuffle(n: u32) -> Result<Network> {
    check_min("u2", n, 2)?;
    let perm = Relabeling::sending(n, &[n - 1, n], &[1, 2])?;
    let net = k_tuple_shuffle(n, 2)?.relabel(&perm)?;
    enforce(Family::U2, n, net.len());
    Ok(net)
}

/// [`u2_shuffle`] relabelled so the designated pair is `(a, b)`.
pub fn pair_placement(n: u32, a: Label, b: Label) -> Result<Network> {
    if a == b || a == 0 || b == 0 || a > n || b > n {
        return Err(ConstructionError::InvalidParameter {
            family: "pair_placement",
            reason: format!("need distinct a, b in [1, {n}], got ({a}, {b})"),
        });
    }
    let perm = Relabeling::sending(n, &[1, 2], &[a, b])?;
    Ok(u2_shuffle(n)?.relabel(&perm)?)
}

/// Fair swaps along the edges of the `t`-dimensional cube, one direction per
/// phase. Vertex `v` carries label `v + 1`.
pub fn hypercube_strong1(t: u32) -> Result<Network> {
    if t > 16 {
        return Err(ConstructionError::InvalidParameter {
            family: "hypercube",
            reason: format!("dimension {t} too large"),
        });
    }
    memo(Key::Hypercube(t), || {
        let n = 1u32 << t;
        let mut swaps = Vec::new();
        for i in 0..t {
            let bit = 1u32 << i;
            for v in (0..n).filter(|v| v & bit == 0) {
                swaps.push(swap(v + 1, v + bit + 1, ProbScalar::half()));
            }
        }
        let net = Network::new(n, swaps)?;
        enforce(Family::Hypercube, n, net.len());
        Ok(net)
    })
}

/// Combine strong `(1, n)`- and `(1, r)`-shuffles into a strong
/// `(1, n + r)`-shuffle with at most `n + r - 1` extra swaps.
///
/// `a` runs on `[n]` and `b` on `[n + 1, n + r]`. Then a balancing pass walks
/// one pointer through each block and keeps the probability that position
/// `i` holds an item from `[n]` equal to `n / (n + r)` behind both pointers.
pub fn merge_strong1(a: &Network, b: &Network) -> Result<Network> {
    let (n, r) = (a.n(), b.n());
    if n == 0 || r == 0 {
        return Err(ConstructionError::InvalidParameter {
            family: "merge",
            reason: "both blocks must be nonempty".into(),
        });
    }
    let total = n + r;
    let target = Rational::ratio(n as i64, total as i64);
    let mut q: Vec<Rational> = (0..total)
        .map(|i| if i < n { Rational::one() } else { Rational::zero() })
        .collect();
    let (mut j, mut jj) = (1u32, n + 1);
    let mut balance = Vec::new();
    while !(j == n + 1 && jj == total + 1) {
        if j > n || jj > total {
            return Err(ConstructionError::Validation(format!(
                "merge pointers out of step at ({j}, {jj})"
            )));
        }
        let (qj, qjj) = (&q[j as usize - 1], &q[jj as usize - 1]);
        let sum = qj + qjj;
        let twice = &target + &target;
        let gap = qj - qjj;
        let (p, step_j, step_jj) = match sum.cmp(&twice) {
            std::cmp::Ordering::Greater => (&(&target - qjj) / &gap, 0, 1),
            std::cmp::Ordering::Less => (&(qj - &target) / &gap, 1, 0),
            std::cmp::Ordering::Equal => (Rational::half(), 1, 1),
        };
        let keep = &Rational::one() - &p;
        let new_j = &(&keep * qj) + &(&p * qjj);
        let new_jj = &(&keep * qjj) + &(&p * qj);
        q[j as usize - 1] = new_j;
        q[jj as usize - 1] = new_jj;
        balance.push(swap(j, jj, ProbScalar::rational(p)?));
        j += step_j;
        jj += step_jj;
    }
    debug_assert!(q.iter().all(|x| *x == target));
    let net = chain(&[
        a.embed(total)?,
        b.shifted(n, total)?,
        Network::new(total, balance)?,
    ])?;
    assert!(
        net.len() <= a.len() + b.len() + total as usize - 1,
        "merge exceeded its budget"
    );
    Ok(net)
}

/// Strong `(1, n)`-shuffle: hypercube blocks for the binary digits of `n`,
/// merged from the lowest digit up.
pub fn strong1(n: u32) -> Result<Network> {
    check_min("strong1", n, 1)?;
    memo(Key::Strong1(n), || {
        let mut acc: Option<Network> = None;
        for i in (0..32).filter(|i| n >> i & 1 == 1) {
            let block = hypercube_strong1(i)?;
            acc = Some(match acc {
                None => block,
                Some(prev) => merge_strong1(&prev, &block)?,
            });
        }
        let net = acc.expect("n >= 1 has a set bit");
        enforce(Family::Strong1, n, net.len());
        Ok(net)
    })
}

/// Shortest transposition sequence reaching every ordered pair from `(1, 2)`.
pub fn reach2(n: u32) -> Result<TranspositionSeq> {
    check_min("reach2", n, 2)?;
    if n > crate::verify::REACH_MAX_N {
        return Err(ConstructionError::InvalidParameter {
            family: "reach2",
            reason: format!("n must be at most {}", crate::verify::REACH_MAX_N),
        });
    }
    let seq = if n % 2 == 0 {
        let half = n / 2;
        let x = |i: u32| 2 + i;
        let y = |i: u32| half + 1 + i;
        let mut pairs = vec![(1, 2)];
        pairs.extend((1..half).rev().map(|i| (1, x(i))));
        pairs.extend((1..half).rev().map(|i| (2, y(i))));
        pairs.extend((1..half).rev().map(|i| (x(i), y(i))));
        TranspositionSeq::new(n, pairs)?
    } else {
        let mut pairs = reach2(n - 1)?.pairs().to_vec();
        pairs.push((1, n));
        pairs.push((2, n));
        let seq = TranspositionSeq::new(n, pairs)?;
        let missing: Vec<_> = reach_digraph(&seq).missing().take(4).collect();
        if !missing.is_empty() {
            return Err(ConstructionError::Validation(format!(
                "reach2({n}) misses pairs {missing:?}"
            )));
        }
        seq
    };
    enforce(Family::Reach2, n, seq.len());
    Ok(seq)
}

/// Nice division `(2, n)`-shuffle with target half `[n / 2]`.
pub fn nice_division(n: u32) -> Result<Network> {
    if n < 2 || n % 2 == 1 {
        return Err(ConstructionError::OddSize {
            family: "division",
            n,
        });
    }
    memo(Key::Division(n), || {
        let net = if n == 2 {
            Network::from_triples(2, [(1, 2, ProbScalar::half())])?
        } else if n % 4 == 0 {
            division_doubling(n / 2)?
        } else {
            division_plus_two(n)?
        };
        enforce(Family::Division, n, net.len());
        Ok(net)
    })
}

/// Two copies of the size-`m` shuffle, then `m` swaps across the copies with
/// the surd probability `q`, then fair swaps inside each half of each block.
fn division_doubling(m: u32) -> Result<Network> {
    let n = 2 * m;
    let half = nice_division(m)?;
    let q = solve_division_q(m)?;
    let q_bar = q.complement();
    let mut cross = Vec::with_capacity(m as usize);
    for i in 1..=m {
        let p = if i <= m / 2 { q.clone() } else { q_bar.clone() };
        cross.push(swap(i, m + i, p));
    }
    let mut fair = Vec::with_capacity(m as usize);
    for i in (1..=m / 2).chain(m + 1..=m + m / 2) {
        fair.push(swap(i, m / 2 + i, ProbScalar::half()));
    }
    chain(&[
        half.embed(n)?,
        half.shifted(m, n)?,
        Network::new(n, cross)?,
        Network::new(n, fair)?,
    ])
}

/// Spread the two new labels `n - 1`, `n` uniformly, run the size-`n - 2`
/// shuffle, then relabel so the target `[n/2 - 1] ∪ {n - 1}` becomes `[n/2]`.
fn division_plus_two(n: u32) -> Result<Network> {
    let spread = pair_placement(n, n - 1, n)?.reverse();
    let inner = nice_division(n - 2)?.embed(n)?;
    let net = spread.concat(&inner)?;
    let h = (n - 2) / 2;
    let images: Vec<Label> = (1..=n)
        .map(|x| match x {
            x if x <= h || x == n => x,
            x if x == n - 1 => h + 1,
            x => x + 1,
        })
        .collect();
    Ok(net.relabel(&Relabeling::new(images)?)?)
}

/// Sizes `m` at which the division recursion doubles, with the cross-swap
/// probability used there, from the innermost level out.
pub fn division_levels(n: u32) -> Result<Vec<(u32, ProbScalar)>> {
    if n < 2 || n % 2 == 1 {
        return Err(ConstructionError::OddSize {
            family: "division",
            n,
        });
    }
    let mut out = Vec::new();
    let mut size = n;
    while size > 2 {
        if size % 4 == 0 {
            out.push((size / 2, solve_division_q(size / 2)?));
            size /= 2;
        } else {
            size -= 2;
        }
    }
    out.reverse();
    Ok(out)
}

/// Strong `(2, n)`-shuffle.
///
/// Even `n`: a nice division shuffle, then independent copies on each half.
/// Odd `n`: spread label `n` uniformly, then the size `n - 1` shuffle.
pub fn strong2(n: u32) -> Result<Network> {
    check_min("strong2", n, 1)?;
    memo(Key::Strong2(n), || {
        let net = match n {
            1 => Network::empty(1),
            2 => Network::from_triples(2, [(1, 2, ProbScalar::half())])?,
            _ if n % 2 == 0 => {
                let m = n / 2;
                let half = strong2(m)?;
                chain(&[nice_division(n)?, half.embed(n)?, half.shifted(m, n)?])?
            }
            _ => placement_chain(n, n)?
                .reverse()
                .concat(&strong2(n - 1)?.embed(n)?)?,
        };
        enforce(Family::Strong2, n, net.len());
        Ok(net)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{single_marginal, Marginals};

    fn triples(net: &Network) -> Vec<(Label, Label, String)> {
        net.swaps()
            .iter()
            .map(|s| (s.a(), s.b(), s.p().to_string()))
            .collect()
    }

    #[test]
    fn placement_examples() {
        assert!(placement_chain(1, 1).unwrap().is_empty());
        assert_eq!(
            triples(&placement_chain(3, 3).unwrap()),
            vec![(3, 2, "2/3".into()), (2, 1, "1/2".into())]
        );
        assert_eq!(
            triples(&placement_chain(2, 1).unwrap()),
            vec![(1, 2, "1/2".into())]
        );
    }

    #[test]
    fn placement_row_is_uniform() {
        for n in 1..=9 {
            for x in 1..=n {
                let Marginals::Exact(m) = single_marginal(&placement_chain(n, x).unwrap()) else {
                    panic!("rational network")
                };
                for j in 1..=n {
                    assert_eq!(*m.get(x, j), Rational::ratio(1, n as i64));
                }
            }
        }
    }

    #[test]
    fn lengths_match_formulas() {
        assert_eq!(k_tuple_shuffle(4, 1).unwrap().len(), 3);
        assert_eq!(k_tuple_shuffle(4, 2).unwrap().len(), 5);
        assert_eq!(k_tuple_shuffle(4, 4).unwrap().len(), 6);
        assert_eq!(u2_shuffle(3).unwrap().len(), 3);
        for t in 1..=5 {
            assert_eq!(hypercube_strong1(t).unwrap().len(), (t as usize) << (t - 1));
        }
        assert_eq!(strong1(4).unwrap().len(), 4);
        assert!(strong1(3).unwrap().len() <= 8);
        assert!(strong1(6).unwrap().len() <= 19);
        assert_eq!(reach2(2).unwrap().len(), 1);
        assert_eq!(reach2(4).unwrap().len(), 4);
        assert_eq!(reach2(6).unwrap().len(), 7);
    }

    #[test]
    fn u2_of_two_is_single_fair_swap() {
        let net = u2_shuffle(2).unwrap();
        assert_eq!(net.len(), 1);
        assert_eq!(net.swaps()[0].pair(), (1, 2));
        assert_eq!(net.swaps()[0].p(), &ProbScalar::half());
    }

    #[test]
    fn hypercube_phases() {
        let net = hypercube_strong1(2).unwrap();
        let pairs: Vec<_> = net.swaps().iter().map(|s| (s.a(), s.b())).collect();
        assert_eq!(pairs, vec![(1, 2), (3, 4), (1, 3), (2, 4)]);
    }

    #[test]
    fn merge_of_points_is_fair_swap() {
        let net = merge_strong1(&Network::empty(1), &Network::empty(1)).unwrap();
        assert_eq!(triples(&net), vec![(1, 2, "1/2".into())]);
    }

    #[test]
    fn division_lengths() {
        let expected = [(2, 1), (4, 6), (8, 20), (16, 56), (32, 144), (64, 352)];
        for (n, len) in expected {
            assert_eq!(nice_division(n).unwrap().len(), len, "n = {n}");
        }
        assert_eq!(nice_division(6).unwrap().len(), 6 + 9);
        assert!(matches!(
            nice_division(3),
            Err(ConstructionError::OddSize { .. })
        ));
    }

    #[test]
    fn strong2_small() {
        assert!(strong2(1).unwrap().is_empty());
        assert_eq!(triples(&strong2(2).unwrap()), vec![(1, 2, "1/2".into())]);
        assert_eq!(strong2(64).unwrap().len(), 1152);
    }

    #[test]
    fn family_names_round_trip() {
        for f in [
            Family::Placement,
            Family::KTuple(3),
            Family::U2,
            Family::Hypercube,
            Family::Strong1,
            Family::Reach2,
            Family::Division,
            Family::Strong2,
        ] {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("ktuple:x".parse::<Family>().is_err());
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn ledger_values() {
        assert_eq!(Family::U2.ledger(16, 29).bound, 29);
        assert_eq!(Family::Strong2.ledger(16, 0).bound, 1024);
        assert_eq!(Family::Strong1.ledger(3, 0).bound, 8);
        assert_eq!(Family::Strong1.ledger(6, 0).bound, 19);
        assert_eq!(Family::Hypercube.ledger(8, 12).bound, 12);
        assert_eq!(Family::Reach2.ledger(5, 6).bound, 6);
    }

    #[test]
    fn levels_follow_recursion() {
        let ms: Vec<u32> = division_levels(12).unwrap().iter().map(|l| l.0).collect();
        // 12 = 2·6, 6 = 4 + 2, 4 = 2·2
        assert_eq!(ms, vec![2, 6]);
    }
}
