use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::propagate::{
    full_distribution_with, propagate_marginal, propagate_pair, PairDistribution,
    FULL_DISTRIBUTION_MAX_N,
};
use super::reach::reach_digraph;
use super::weight::{prepare, Judgement, Step, Weight, MAX_WIDTH};
use super::VerifyError;
use crate::network::{Label, Network, TranspositionSeq};
use crate::numeric::{Interval, Rational, DEFAULT_PRECISION_BITS};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Settings shared by every check.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub tol: f64,
    pub precision_bits: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tol: DEFAULT_TOLERANCE,
            precision_bits: DEFAULT_PRECISION_BITS,
        }
    }
}

impl CheckOptions {
    pub fn with_tol(tol: f64) -> Self {
        CheckOptions {
            tol,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Interval,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Start pair, for checks quantified over pairs.
    pub pair: Option<[Label; 2]>,
    /// The offending entry (a matrix cell, an ordered pair, or an aggregate).
    pub entry: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of a check. A failing check is a verdict, not an error.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub mode: Mode,
    pub pass: bool,
    pub tolerance: Option<f64>,
    pub max_interval_width: Option<f64>,
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation_pass: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }
}

const INTERVAL_NOTE: &str =
    "irrational probabilities: equalities certified only up to the tolerance by interval enclosure";

/// An exact target value, pre-converted to the weight type.
struct Target<W> {
    exact: Rational,
    value: W,
}

impl<W: Weight> Target<W> {
    fn new(exact: &Rational) -> Self {
        Target {
            exact: exact.clone(),
            value: W::from_rational(exact),
        }
    }
}

/// Accumulates judgements and keeps the worst failure as the witness.
struct Tally {
    pass: bool,
    max_width: f64,
    worst: Option<(f64, Witness)>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            pass: true,
            max_width: 0.0,
            worst: None,
        }
    }

    fn record<W: Weight>(
        &mut self,
        got: &W,
        target: &Target<W>,
        tol: f64,
        pair: Option<[Label; 2]>,
        entry: impl FnOnce() -> String,
    ) {
        let Judgement {
            pass,
            deviation,
            width,
        } = got.judge(&target.value, tol);
        self.max_width = self.max_width.max(width);
        if pass {
            return;
        }
        self.pass = false;
        // width failures rank by width when the value itself is close
        let badness = deviation.max(width);
        if self.worst.as_ref().is_none_or(|(b, _)| badness > *b) {
            self.worst = Some((
                badness,
                Witness {
                    pair,
                    entry: entry(),
                    expected: target.exact.to_string(),
                    got: got.to_string(),
                },
            ));
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.pass &= other.pass;
        self.max_width = self.max_width.max(other.max_width);
        if let Some((b, w)) = other.worst {
            if self.worst.as_ref().is_none_or(|(mine, _)| b > *mine) {
                self.worst = Some((b, w));
            }
        }
        self
    }

    fn verdict(self, check: &str, exact: bool, tol: f64) -> Verdict {
        Verdict {
            check: check.to_string(),
            mode: if exact { Mode::Exact } else { Mode::Interval },
            pass: self.pass,
            tolerance: (!exact).then_some(tol),
            max_interval_width: (!exact).then_some(self.max_width),
            witness: self.worst.map(|(_, w)| w),
            orientation_pass: None,
            notes: if exact {
                Vec::new()
            } else {
                vec![INTERVAL_NOTE.to_string(), format!("width bound {MAX_WIDTH:e}")]
            },
        }
    }
}

/// Run `body` with exact weights when the network is rational, otherwise with
/// intervals.
macro_rules! dispatch {
    ($net:expr, $opts:expr, |$steps:ident| $body:expr) => {
        match prepare::<Rational>($net, $opts.precision_bits) {
            Some($steps) => $body,
            None => {
                let $steps = prepare::<Interval>($net, $opts.precision_bits)
                    .expect("intervals always exist");
                $body
            }
        }
    };
}

fn strong1_with<W: Weight>(n: u32, steps: &[Step<W>], opts: CheckOptions) -> Verdict {
    let m = propagate_marginal(n as usize, steps);
    let target = Target::new(&Rational::ratio(1, i64::from(n)));
    let mut tally = Tally::new();
    for ((i, j), w) in m.entries() {
        tally.record(w, &target, opts.tol, None, || format!("({i},{j})"));
    }
    tally.verdict("strong1", W::EXACT, opts.tol)
}

/// Every element lands on every position with probability `1/n`.
pub fn check_strong1(net: &Network, opts: CheckOptions) -> Verdict {
    dispatch!(net, opts, |steps| strong1_with(net.n(), &steps, opts))
}

fn pair_target(n: u32) -> Rational {
    Rational::ratio(1, i64::from(n) * (i64::from(n) - 1))
}

fn tally_uniform_pairs<W: Weight>(d: &PairDistribution<W>, target: &Target<W>, tol: f64) -> Tally {
    let mut tally = Tally::new();
    let (x, y) = d.start();
    for ((i, j), w) in d.entries() {
        tally.record(w, target, tol, Some([x, y]), || format!("({i},{j})"));
    }
    tally
}

/// The image of the ordered start pair `(x, y)` is uniform over ordered pairs.
pub fn check_pair_uniform(
    net: &Network,
    x: Label,
    y: Label,
    opts: CheckOptions,
) -> Result<Verdict, VerifyError> {
    let n = net.n();
    if x == y || x == 0 || y == 0 || x > n || y > n {
        return Err(VerifyError::BadPair(x, y));
    }
    Ok(dispatch!(net, opts, |steps| {
        let d = propagate_pair(n as usize, &steps, x, y);
        let exact = d_is_exact(&d);
        tally_uniform_pairs(&d, &Target::new(&pair_target(n)), opts.tol).verdict(
            &format!("pair:{x},{y}"),
            exact,
            opts.tol,
        )
    }))
}

fn d_is_exact<W: Weight>(_: &PairDistribution<W>) -> bool {
    W::EXACT
}

/// Propagate every unordered start pair once; the reversed ordered pair is
/// read off the transposed distribution.
fn over_all_pairs<W: Weight, T: Send>(
    n: u32,
    steps: &[Step<W>],
    judge: impl Fn(&PairDistribution<W>) -> T + Sync,
    merge: impl Fn(T, T) -> T + Sync,
    init: impl Fn() -> T,
) -> T {
    let starts: Vec<(Label, Label)> = (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |y| (x, y)))
        .collect();
    starts
        .par_iter()
        .map(|&(x, y)| {
            let d = propagate_pair(n as usize, steps, x, y);
            merge(judge(&d), judge(&d.transposed()))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(init(), &merge)
}

/// Every ordered start pair maps uniformly onto ordered pairs.
pub fn check_strong2(net: &Network, opts: CheckOptions) -> Verdict {
    let n = net.n();
    if n < 2 {
        // vacuous: there are no pairs
        return Tally::new().verdict("strong2", net.is_rational(), opts.tol);
    }
    dispatch!(net, opts, |steps| {
        let exact = steps_exact(&steps);
        let target = Target::new(&pair_target(n));
        over_all_pairs(
            n,
            &steps,
            |d| tally_uniform_pairs(d, &target, opts.tol),
            Tally::merge,
            Tally::new,
        )
        .verdict("strong2", exact, opts.tol)
    })
}

fn steps_exact<W: Weight>(_: &[Step<W>]) -> bool {
    W::EXACT
}

/// The four region aggregates of a pair distribution, with the first half
/// `[1, n/2]` as region "in": both in, first out / second in, both out,
/// first in / second out.
pub fn division_aggregates<W: Weight>(d: &PairDistribution<W>) -> [W; 4] {
    let half = (d.n() / 2) as Label;
    let mut sums = [W::zero(), W::zero(), W::zero(), W::zero()];
    for ((i, j), w) in d.entries() {
        let slot = match (i <= half, j <= half) {
            (true, true) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, false) => 3,
        };
        sums[slot] = sums[slot].add(w);
    }
    sums
}

/// Division targets `(1/4 - 1/(4(n-1)), 1/4 + 1/(4(n-1)))`.
pub fn division_targets(n: u32) -> (Rational, Rational) {
    let n = i64::from(n);
    (
        Rational::ratio(n - 2, 4 * (n - 1)),
        Rational::ratio(n, 4 * (n - 1)),
    )
}

/// Every ordered pair is split between `[1, n/2]` and its complement like a
/// uniformly random pair: both-in and both-out with `1/4 - 1/(4(n-1))`,
/// first-out/second-in with `1/4 + 1/(4(n-1))`. The remaining orientation
/// (first-in/second-out) is reported separately as `orientation_pass`.
pub fn check_division(net: &Network, opts: CheckOptions) -> Result<Verdict, VerifyError> {
    let n = net.n();
    if n % 2 != 0 || n < 2 {
        return Err(VerifyError::OddSize(n));
    }
    let (same, split) = division_targets(n);
    let names = ["both-in", "out-in", "both-out", "in-out"];
    let (main, orientation) = dispatch!(net, opts, |steps| {
        let exact = steps_exact(&steps);
        let (same, split) = (Target::new(&same), Target::new(&split));
        let targets = [&same, &split, &same, &split];
        // the literal three aggregates, and the other split orientation
        let judge = |d: &_| {
            let sums = division_aggregates(d);
            let (x, y) = d.start();
            let mut tallies = (Tally::new(), Tally::new());
            for k in 0..4 {
                let tally = if k < 3 { &mut tallies.0 } else { &mut tallies.1 };
                tally.record(&sums[k], targets[k], opts.tol, Some([x, y]), || {
                    names[k].to_string()
                });
            }
            tallies
        };
        let (main, other) = over_all_pairs(
            n,
            &steps,
            judge,
            |a: (Tally, Tally), b: (Tally, Tally)| (a.0.merge(b.0), a.1.merge(b.1)),
            || (Tally::new(), Tally::new()),
        );
        (main.verdict("division", exact, opts.tol), other.pass)
    });
    Ok(Verdict {
        orientation_pass: Some(orientation),
        ..main
    })
}

/// The network's permutation is uniform on all `n!` permutations.
pub fn check_full_uniform(net: &Network, opts: CheckOptions) -> Result<Verdict, VerifyError> {
    let n = net.n();
    if n > FULL_DISTRIBUTION_MAX_N {
        return Err(VerifyError::TooLarge {
            n,
            max: FULL_DISTRIBUTION_MAX_N,
        });
    }
    let count: i64 = (1..=i64::from(n)).product();
    let exact = Rational::ratio(1, count);
    dispatch!(net, opts, |steps| {
        let d = full_distribution_with(n, &steps)?;
        let target = Target::new(&exact);
        let mut tally = Tally::new();
        let mut images: Vec<Label> = (1..=n).collect();
        loop {
            let w = d.prob(&images);
            tally.record(&w, &target, opts.tol, None, || format!("{images:?}"));
            if !next_permutation(&mut images) {
                break;
            }
        }
        Ok(tally.verdict("full", steps_exact(&steps), opts.tol))
    })
}

/// Advance to the lexicographically next arrangement; false after the last.
fn next_permutation(xs: &mut [Label]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("pivot has a successor");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Every ordered pair `(i, j)` is reachable from `(1, 2)`.
pub fn check_reachability(seq: &TranspositionSeq) -> Verdict {
    let g = reach_digraph(seq);
    let missing = g.missing().next();
    Verdict {
        check: "reach".to_string(),
        mode: Mode::Exact,
        pass: missing.is_none(),
        tolerance: None,
        max_interval_width: None,
        witness: missing.map(|(i, j)| Witness {
            pair: Some([1, 2]),
            entry: format!("({i},{j})"),
            expected: "reachable".to_string(),
            got: "unreachable".to_string(),
        }),
        orientation_pass: None,
        notes: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ProbScalar};

    fn half_net(n: u32, pairs: &[(Label, Label)]) -> Network {
        Network::from_triples(n, pairs.iter().map(|&(a, b)| (a, b, ProbScalar::half()))).unwrap()
    }

    #[test]
    fn strong1_failure_names_untouched_element() {
        let v = check_strong1(&half_net(3, &[(1, 2)]), CheckOptions::default());
        assert!(!v.pass);
        assert_eq!(v.mode, Mode::Exact);
        let w = v.witness.unwrap();
        assert_eq!(w.entry, "(3,3)");
        assert_eq!(w.got, "1");
        assert_eq!(w.expected, "1/3");
    }

    #[test]
    fn strong2_on_two_points() {
        let v = check_strong2(&half_net(2, &[(1, 2)]), CheckOptions::default());
        assert!(v.pass, "{v:?}");
    }

    #[test]
    fn division_on_two_points() {
        let v = check_division(&half_net(2, &[(1, 2)]), CheckOptions::default()).unwrap();
        assert!(v.pass);
        assert_eq!(v.orientation_pass, Some(true));
    }

    #[test]
    fn full_uniform_on_three_points() {
        // the placement chain for 3 onto [1, 2] uniform, then 3 placed
        let net = Network::from_triples(
            3,
            [(1, 2, ProbScalar::half()), (1, 3, rat(1, 3).unwrap()), (2, 3, ProbScalar::half())],
        )
        .unwrap();
        assert!(check_full_uniform(&net, CheckOptions::default()).unwrap().pass);
        let v = check_full_uniform(&half_net(3, &[(1, 2)]), CheckOptions::default()).unwrap();
        assert!(!v.pass);
        assert!(check_full_uniform(&Network::empty(8), CheckOptions::default()).is_err());
    }

    #[test]
    fn permutations_enumerate_in_order() {
        let mut xs = vec![1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut xs) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(xs, vec![3, 2, 1]);
    }

    #[test]
    fn hypercube_is_not_a_division_shuffle() {
        // 2-cube: direction 1 then direction 2
        let net = half_net(4, &[(1, 2), (3, 4), (1, 3), (2, 4)]);
        let v = check_division(&net, CheckOptions::default()).unwrap();
        assert!(!v.pass);
        assert!(check_strong1(&net, CheckOptions::default()).pass);
    }

    #[test]
    fn division_rejects_odd_size() {
        assert!(matches!(
            check_division(&Network::empty(3), CheckOptions::default()),
            Err(VerifyError::OddSize(3))
        ));
    }

    #[test]
    fn pair_uniform_fails_on_identity() {
        let v = check_pair_uniform(&Network::empty(3), 1, 2, CheckOptions::default()).unwrap();
        assert!(!v.pass);
        assert_eq!(v.witness.unwrap().pair, Some([1, 2]));
    }

    #[test]
    fn verdict_json_fields() {
        let net = Network::from_triples(2, [(1, 2, rat(1, 3).unwrap())]).unwrap();
        let v = check_strong1(&net, CheckOptions::default());
        let json: serde_json::Value = serde_json::from_str(&v.to_json()).unwrap();
        for key in ["check", "mode", "pass", "tolerance", "max_interval_width", "witness"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["mode"], "exact");
        assert_eq!(json["witness"]["expected"], "1/2");
    }
}
