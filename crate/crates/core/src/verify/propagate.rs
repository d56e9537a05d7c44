use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::weight::{prepare, Step, Weight};
use super::VerifyError;
use crate::network::{Label, Network};
use crate::numeric::{Interval, Rational, DEFAULT_PRECISION_BITS};

/// `A[i][j] = P(i is mapped to j)`, row-major, labels one-based in accessors.
#[derive(Clone, Debug, PartialEq)]
pub struct MarginalMatrix<W> {
    n: usize,
    entries: Vec<W>,
}

impl<W: Weight> MarginalMatrix<W> {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![W::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = W::one();
        }
        MarginalMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, from: Label, to: Label) -> &W {
        &self.entries[(from as usize - 1) * self.n + (to as usize - 1)]
    }

    pub fn row(&self, from: Label) -> &[W] {
        let i = from as usize - 1;
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Apply one swap: the positions `a` and `b` exchange mass in every row.
    pub fn apply(&mut self, step: &Step<W>) {
        let n = self.n;
        for row in 0..n {
            let (ia, ib) = (row * n + step.a, row * n + step.b);
            let (va, vb) = (&self.entries[ia], &self.entries[ib]);
            if va.is_zero() && vb.is_zero() {
                continue;
            }
            let na = va.mix(vb, &step.p, &step.keep);
            let nb = vb.mix(va, &step.p, &step.keep);
            self.entries[ia] = na;
            self.entries[ib] = nb;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((Label, Label), &W)> + '_ {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, w)| (((k / n) as Label + 1, (k % n) as Label + 1), w))
    }

    pub fn row_sums(&self) -> Vec<W> {
        (1..=self.n as Label)
            .map(|i| self.row(i).iter().fold(W::zero(), |acc, w| acc.add(w)))
            .collect()
    }

    pub fn col_sums(&self) -> Vec<W> {
        (1..=self.n as Label)
            .map(|j| {
                (1..=self.n as Label).fold(W::zero(), |acc, i| acc.add(self.get(i, j)))
            })
            .collect()
    }
}

/// Marginal matrix in whichever mode the network admits.
#[derive(Clone, Debug)]
pub enum Marginals {
    Exact(MarginalMatrix<Rational>),
    Interval(MarginalMatrix<Interval>),
}

pub fn propagate_marginal<W: Weight>(n: usize, steps: &[Step<W>]) -> MarginalMatrix<W> {
    let mut m = MarginalMatrix::identity(n);
    for step in steps {
        m.apply(step);
    }
    m
}

/// Single-element marginals, exact when every probability is rational.
pub fn single_marginal(net: &Network) -> Marginals {
    single_marginal_at(net, DEFAULT_PRECISION_BITS)
}

pub fn single_marginal_at(net: &Network, precision_bits: u32) -> Marginals {
    let n = net.n() as usize;
    match prepare::<Rational>(net, precision_bits) {
        Some(steps) => Marginals::Exact(propagate_marginal(n, &steps)),
        None => {
            let steps = prepare::<Interval>(net, precision_bits).expect("intervals always exist");
            Marginals::Interval(propagate_marginal(n, &steps))
        }
    }
}

/// Distribution of the image of the ordered start pair `(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairDistribution<W> {
    n: usize,
    start: (Label, Label),
    entries: Vec<W>,
}

impl<W: Weight> PairDistribution<W> {
    pub fn point(n: usize, x: Label, y: Label) -> Self {
        let mut entries = vec![W::zero(); n * n];
        entries[(x as usize - 1) * n + (y as usize - 1)] = W::one();
        PairDistribution {
            n,
            start: (x, y),
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> (Label, Label) {
        self.start
    }

    /// `P(x ↦ i, y ↦ j)`.
    pub fn get(&self, i: Label, j: Label) -> &W {
        &self.entries[(i as usize - 1) * self.n + (j as usize - 1)]
    }

    /// Apply one swap: each state `s` becomes `(1-p)·D(s) + p·D(τs)`, where
    /// `τ` exchanges `a` and `b` in both coordinates. Only states touching
    /// `a` or `b` change.
    pub fn apply(&mut self, step: &Step<W>) {
        let n = self.n;
        let (a, b) = (step.a, step.b);
        let mut exchange = |u: usize, v: usize| {
            let (du, dv) = (&self.entries[u], &self.entries[v]);
            if du.is_zero() && dv.is_zero() {
                return;
            }
            let nu = du.mix(dv, &step.p, &step.keep);
            let nv = dv.mix(du, &step.p, &step.keep);
            self.entries[u] = nu;
            self.entries[v] = nv;
        };
        for k in 0..n {
            if k == a || k == b {
                continue;
            }
            exchange(a * n + k, b * n + k);
            exchange(k * n + a, k * n + b);
        }
        exchange(a * n + b, b * n + a);
    }

    /// Ordered pairs `(i, j)`, `i ≠ j`, with their probabilities.
    pub fn entries(&self) -> impl Iterator<Item = ((Label, Label), &W)> + '_ {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(move |(k, _)| k / n != k % n)
            .map(move |(k, w)| (((k / n) as Label + 1, (k % n) as Label + 1), w))
    }

    pub fn total(&self) -> W {
        self.entries().fold(W::zero(), |acc, (_, w)| acc.add(w))
    }

    /// The same distribution seen from the swapped start pair `(y, x)`.
    pub fn transposed(&self) -> Self {
        let n = self.n;
        let mut entries = vec![W::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        PairDistribution {
            n,
            start: (self.start.1, self.start.0),
            entries,
        }
    }
}

pub fn propagate_pair<W: Weight>(
    n: usize,
    steps: &[Step<W>],
    x: Label,
    y: Label,
) -> PairDistribution<W> {
    let mut d = PairDistribution::point(n, x, y);
    for step in steps {
        d.apply(step);
    }
    d
}

#[derive(Clone, Debug)]
pub enum Pairs {
    Exact(PairDistribution<Rational>),
    Interval(PairDistribution<Interval>),
}

fn check_pair_labels(net: &Network, x: Label, y: Label) -> Result<(), VerifyError> {
    if x == y || x == 0 || y == 0 || x > net.n() || y > net.n() {
        return Err(VerifyError::BadPair(x, y));
    }
    Ok(())
}

pub fn pair_marginal(net: &Network, x: Label, y: Label) -> Result<Pairs, VerifyError> {
    pair_marginal_at(net, x, y, DEFAULT_PRECISION_BITS)
}

pub fn pair_marginal_at(
    net: &Network,
    x: Label,
    y: Label,
    precision_bits: u32,
) -> Result<Pairs, VerifyError> {
    check_pair_labels(net, x, y)?;
    let n = net.n() as usize;
    Ok(match prepare::<Rational>(net, precision_bits) {
        Some(steps) => Pairs::Exact(propagate_pair(n, &steps, x, y)),
        None => {
            let steps = prepare::<Interval>(net, precision_bits).expect("intervals always exist");
            Pairs::Interval(propagate_pair(n, &steps, x, y))
        }
    })
}

/// Largest ground set the full-distribution oracle accepts.
pub const FULL_DISTRIBUTION_MAX_N: u32 = 7;

/// Law of the network's random permutation, keyed by the image list
/// `[σ(1), …, σ(n)]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FullDistribution<W> {
    n: u32,
    probs: BTreeMap<Vec<Label>, W>,
}

fn pack(images: &[u8]) -> u64 {
    images
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &x)| acc | (u64::from(x) << (8 * i)))
}

fn unpack(key: u64, n: usize) -> Vec<Label> {
    (0..n).map(|i| ((key >> (8 * i)) & 0xff) as Label + 1).collect()
}

impl<W: Weight> FullDistribution<W> {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn support_size(&self) -> usize {
        self.probs.len()
    }

    /// Probability of the permutation with the given image list; zero if
    /// outside the support.
    pub fn prob(&self, images: &[Label]) -> W {
        self.probs.get(images).cloned().unwrap_or_else(W::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Label>, &W)> {
        self.probs.iter()
    }

    pub fn total(&self) -> W {
        self.probs.values().fold(W::zero(), |acc, w| acc.add(w))
    }

    /// Law of the image of the tuple `xs` under the permutation.
    pub fn tuple_marginal(&self, xs: &[Label]) -> BTreeMap<Vec<Label>, W> {
        let mut out: BTreeMap<Vec<Label>, W> = BTreeMap::new();
        for (images, w) in &self.probs {
            let key: Vec<Label> = xs.iter().map(|&x| images[x as usize - 1]).collect();
            let slot = out.entry(key).or_insert_with(W::zero);
            *slot = slot.add(w);
        }
        out
    }

    /// Law of the inverse permutation.
    pub fn inverse_pushforward(&self) -> FullDistribution<W> {
        let probs = self
            .probs
            .iter()
            .map(|(images, w)| {
                let mut inv = vec![0; images.len()];
                for (i, &y) in images.iter().enumerate() {
                    inv[y as usize - 1] = i as Label + 1;
                }
                (inv, w.clone())
            })
            .collect();
        FullDistribution { n: self.n, probs }
    }
}

/// Exact dynamic program over all permutation states; each swap splits every
/// state's mass into a kept part and a transposed part.
pub fn full_distribution(net: &Network) -> Result<FullDistribution<Rational>, VerifyError> {
    let steps = prepare::<Rational>(net, DEFAULT_PRECISION_BITS).ok_or(VerifyError::NotRational)?;
    full_distribution_with(net.n(), &steps)
}

pub fn full_distribution_with<W: Weight>(
    n: u32,
    steps: &[Step<W>],
) -> Result<FullDistribution<W>, VerifyError> {
    if n > FULL_DISTRIBUTION_MAX_N {
        return Err(VerifyError::TooLarge {
            n,
            max: FULL_DISTRIBUTION_MAX_N,
        });
    }
    let size = n as usize;
    let identity: Vec<u8> = (0..size as u8).collect();
    let mut states: HashMap<u64, W> = HashMap::from([(pack(&identity), W::one())]);
    for step in steps {
        let (a, b) = (step.a as u64, step.b as u64);
        let mut next: HashMap<u64, W> = HashMap::with_capacity(states.len() * 2);
        for (key, w) in states {
            // compose with the transposition: relabel values a <-> b
            let mut swapped = key;
            for i in 0..size {
                let v = (key >> (8 * i)) & 0xff;
                if v == a || v == b {
                    let other = if v == a { b } else { a };
                    swapped = (swapped & !(0xff << (8 * i))) | (other << (8 * i));
                }
            }
            let stay = w.mul(&step.keep);
            let moved = w.mul(&step.p);
            for (k, part) in [(key, stay), (swapped, moved)] {
                if part.is_zero() {
                    continue;
                }
                let slot = next.entry(k).or_insert_with(W::zero);
                *slot = slot.add(&part);
            }
        }
        states = next;
    }
    let probs = states
        .into_iter()
        .map(|(k, w)| (unpack(k, size), w))
        .collect();
    Ok(FullDistribution { n, probs })
}
