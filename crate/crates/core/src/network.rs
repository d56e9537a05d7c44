//! Networks of lazy transpositions.
//!
//! A [`Network`] stores its swaps in *execution order*: index 0 acts first.
//! The random permutation of a network with swaps `s_1, …, s_l` is the
//! composition `s_l ∘ … ∘ s_1`. In the usual product notation
//! `T_1 T_2 … T_l`, where `T_l` is applied first, this corresponds to
//! `T_i = s_{l+1-i}`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{NumericError, ProbScalar};

pub type Label = u32;

/// Value of the mandatory `convention` field in network files.
pub const EXECUTION_ORDER: &str = "execution-order";

#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("swap endpoints must differ, got ({0}, {0})")]
    DegenerateSwap(Label),
    #[error("label {label} outside ground set [1, {n}]")]
    LabelOutOfRange { label: Label, n: u32 },
    #[error("ground sets differ: {0} vs {1}")]
    SizeMismatch(u32, u32),
    #[error("cannot embed a network on {from} points into {to} points")]
    EmbedShrinks { from: u32, to: u32 },
    #[error("relabeling is not a bijection on [1, {0}]")]
    NotABijection(u32),
    #[error("unsupported convention {0:?}, expected \"execution-order\"")]
    Convention(String),
    #[error("malformed document: {0}")]
    Schema(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Swap `a` and `b` with probability `p`, otherwise do nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LazySwap {
    a: Label,
    b: Label,
    p: ProbScalar,
}

impl LazySwap {
    pub fn new(a: Label, b: Label, p: ProbScalar) -> Result<Self, NetworkError> {
        if a == b {
            return Err(NetworkError::DegenerateSwap(a));
        }
        if a == 0 || b == 0 {
            return Err(NetworkError::LabelOutOfRange {
                label: 0,
                n: a.max(b),
            });
        }
        Ok(LazySwap { a, b, p })
    }

    pub fn a(&self) -> Label {
        self.a
    }

    pub fn b(&self) -> Label {
        self.b
    }

    pub fn p(&self) -> &ProbScalar {
        &self.p
    }

    /// Endpoints as an unordered pair, smaller first.
    pub fn pair(&self) -> (Label, Label) {
        (self.a.min(self.b), self.a.max(self.b))
    }

    /// Zero-based endpoints.
    pub fn indices(&self) -> (usize, usize) {
        (self.a as usize - 1, self.b as usize - 1)
    }
}

impl fmt::Debug for LazySwap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.p)
    }
}

/// A bijection of `[1, n]`; `image(i)` is where label `i` is sent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    images: Vec<Label>,
}

impl Relabeling {
    pub fn new(images: Vec<Label>) -> Result<Self, NetworkError> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x as usize - 1], true) {
                return Err(NetworkError::NotABijection(n));
            }
        }
        Ok(Relabeling { images })
    }

    pub fn identity(n: u32) -> Self {
        Relabeling {
            images: (1..=n).collect(),
        }
    }

    /// The bijection sending each `from[i]` to `to[i]`; every other label is
    /// sent, in increasing order, to the smallest unused target.
    pub fn sending(n: u32, from: &[Label], to: &[Label]) -> Result<Self, NetworkError> {
        assert_eq!(from.len(), to.len());
        let mut images = vec![0; n as usize];
        let mut used = vec![false; n as usize];
        for (&x, &y) in from.iter().zip(to) {
            if x == 0 || x > n || y == 0 || y > n {
                return Err(NetworkError::NotABijection(n));
            }
            if images[x as usize - 1] != 0 || used[y as usize - 1] {
                return Err(NetworkError::NotABijection(n));
            }
            images[x as usize - 1] = y;
            used[y as usize - 1] = true;
        }
        let mut free = (1..=n).filter(|&y| !used[y as usize - 1]);
        for slot in images.iter_mut().filter(|s| **s == 0) {
            *slot = free.next().expect("counts match");
        }
        Self::new(images)
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn image(&self, label: Label) -> Label {
        self.images[label as usize - 1]
    }

    pub fn inverse(&self) -> Relabeling {
        let mut images = vec![0; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y as usize - 1] = i as Label + 1;
        }
        Relabeling { images }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Relabeling) -> Relabeling {
        Relabeling {
            images: first.images.iter().map(|&x| self.image(x)).collect(),
        }
    }
}

/// An ordered list of lazy swaps on the ground set `[1, n]`, in execution
/// order. Immutable: every transform returns a new network.
#[derive(Clone, PartialEq, Eq)]
pub struct Network {
    n: u32,
    swaps: Vec<LazySwap>,
}

impl Network {
    pub fn new(n: u32, swaps: Vec<LazySwap>) -> Result<Self, NetworkError> {
        for s in &swaps {
            for label in [s.a, s.b] {
                if label > n {
                    return Err(NetworkError::LabelOutOfRange { label, n });
                }
            }
        }
        Ok(Network { n, swaps })
    }

    pub fn empty(n: u32) -> Self {
        Network {
            n,
            swaps: Vec::new(),
        }
    }

    /// Build from `(a, b, p)` triples; handy in tests and examples.
    pub fn from_triples(
        n: u32,
        triples: impl IntoIterator<Item = (Label, Label, ProbScalar)>,
    ) -> Result<Self, NetworkError> {
        let swaps = triples
            .into_iter()
            .map(|(a, b, p)| LazySwap::new(a, b, p))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, swaps)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    pub fn swaps(&self) -> &[LazySwap] {
        &self.swaps
    }

    pub fn is_rational(&self) -> bool {
        self.swaps.iter().all(|s| s.p.is_rational())
    }

    /// The first `len` swaps.
    pub fn prefix(&self, len: usize) -> Network {
        Network {
            n: self.n,
            swaps: self.swaps[..len].to_vec(),
        }
    }

    /// Swap list reversed. Each lazy swap is an involution, so the law of the
    /// result is the law of the inverse permutation.
    pub fn reverse(&self) -> Network {
        Network {
            n: self.n,
            swaps: self.swaps.iter().rev().cloned().collect(),
        }
    }

    /// Replace every label `a` by `perm(a)`. The result sends `perm(i)` to
    /// `perm(j)` with the probability that the input sends `i` to `j`.
    pub fn relabel(&self, perm: &Relabeling) -> Result<Network, NetworkError> {
        if perm.n() != self.n {
            return Err(NetworkError::SizeMismatch(self.n, perm.n()));
        }
        let swaps = self
            .swaps
            .iter()
            .map(|s| LazySwap {
                a: perm.image(s.a),
                b: perm.image(s.b),
                p: s.p.clone(),
            })
            .collect();
        Ok(Network { n: self.n, swaps })
    }

    /// Run `self`, then `then`.
    pub fn concat(&self, then: &Network) -> Result<Network, NetworkError> {
        if self.n != then.n {
            return Err(NetworkError::SizeMismatch(self.n, then.n));
        }
        let mut swaps = self.swaps.clone();
        swaps.extend(then.swaps.iter().cloned());
        Ok(Network { n: self.n, swaps })
    }

    /// Same swaps on the larger ground set `[1, m]`; new labels are fixed.
    pub fn embed(&self, m: u32) -> Result<Network, NetworkError> {
        if m < self.n {
            return Err(NetworkError::EmbedShrinks { from: self.n, to: m });
        }
        Ok(Network {
            n: m,
            swaps: self.swaps.clone(),
        })
    }

    /// Embed into `[1, m]` and add `offset` to every label.
    pub fn shifted(&self, offset: u32, m: u32) -> Result<Network, NetworkError> {
        if self.n + offset > m {
            return Err(NetworkError::EmbedShrinks {
                from: self.n + offset,
                to: m,
            });
        }
        let swaps = self
            .swaps
            .iter()
            .map(|s| LazySwap {
                a: s.a + offset,
                b: s.b + offset,
                p: s.p.clone(),
            })
            .collect();
        Ok(Network { n: m, swaps })
    }

    pub fn encode(&self) -> Vec<u8> {
        serde_json::to_vec_pretty(&NetworkDoc::from(self)).expect("network serializes")
    }

    pub fn decode(bytes: &[u8]) -> Result<Network, NetworkError> {
        let doc: NetworkDoc =
            serde_json::from_slice(bytes).map_err(|e| NetworkError::Schema(e.to_string()))?;
        doc.try_into()
    }
}

impl fmt::Debug for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Network")
            .field("n", &self.n)
            .field("swaps", &self.swaps)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SwapDoc {
    a: Label,
    b: Label,
    p: ProbScalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    convention: String,
    n: u32,
    swaps: Vec<SwapDoc>,
}

impl From<&Network> for NetworkDoc {
    fn from(net: &Network) -> Self {
        NetworkDoc {
            convention: EXECUTION_ORDER.to_string(),
            n: net.n,
            swaps: net
                .swaps
                .iter()
                .map(|s| SwapDoc {
                    a: s.a,
                    b: s.b,
                    p: s.p.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<NetworkDoc> for Network {
    type Error = NetworkError;

    fn try_from(doc: NetworkDoc) -> Result<Self, Self::Error> {
        if doc.convention != EXECUTION_ORDER {
            return Err(NetworkError::Convention(doc.convention));
        }
        let swaps = doc
            .swaps
            .into_iter()
            .map(|s| LazySwap::new(s.a, s.b, s.p))
            .collect::<Result<Vec<_>, _>>()?;
        Network::new(doc.n, swaps)
    }
}

/// A plain sequence of transpositions, without probabilities, in execution
/// order. Used for the reachability problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeqDoc", into = "SeqDoc")]
pub struct TranspositionSeq {
    n: u32,
    pairs: Vec<(Label, Label)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeqDoc {
    n: u32,
    swaps: Vec<[Label; 2]>,
}

impl TranspositionSeq {
    pub fn new(n: u32, pairs: Vec<(Label, Label)>) -> Result<Self, NetworkError> {
        for &(a, b) in &pairs {
            if a == b {
                return Err(NetworkError::DegenerateSwap(a));
            }
            for label in [a, b] {
                if label == 0 || label > n {
                    return Err(NetworkError::LabelOutOfRange { label, n });
                }
            }
        }
        Ok(TranspositionSeq { n, pairs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Label, Label)] {
        &self.pairs
    }

    pub fn prefix(&self, len: usize) -> TranspositionSeq {
        TranspositionSeq {
            n: self.n,
            pairs: self.pairs[..len].to_vec(),
        }
    }

    pub fn encode(&self) -> Vec<u8> {
        serde_json::to_vec(self).expect("sequence serializes")
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, NetworkError> {
        serde_json::from_slice(bytes).map_err(|e| NetworkError::Schema(e.to_string()))
    }
}

impl From<TranspositionSeq> for SeqDoc {
    fn from(seq: TranspositionSeq) -> Self {
        SeqDoc {
            n: seq.n,
            swaps: seq.pairs.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<SeqDoc> for TranspositionSeq {
    type Error = NetworkError;

    fn try_from(doc: SeqDoc) -> Result<Self, Self::Error> {
        TranspositionSeq::new(doc.n, doc.swaps.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn half_swap(a: Label, b: Label) -> LazySwap {
        LazySwap::new(a, b, ProbScalar::half()).unwrap()
    }

    #[test]
    fn reverse_of_empty_and_single() {
        let empty = Network::empty(3);
        assert_eq!(empty.reverse(), empty);
        let one = Network::new(2, vec![half_swap(1, 2)]).unwrap();
        assert_eq!(one.reverse(), one);
    }

    #[test]
    fn relabel_substitutes_labels() {
        let net = Network::new(3, vec![half_swap(1, 2)]).unwrap();
        let perm = Relabeling::new(vec![3, 2, 1]).unwrap();
        let out = net.relabel(&perm).unwrap();
        assert_eq!(out.swaps()[0].a(), 3);
        assert_eq!(out.swaps()[0].b(), 2);
        assert_eq!(net.relabel(&Relabeling::identity(3)).unwrap(), net);
    }

    #[test]
    fn relabel_rejects_non_bijection() {
        assert!(Relabeling::new(vec![1, 1, 3]).is_err());
        assert!(Relabeling::new(vec![1, 4, 3]).is_err());
    }

    #[test]
    fn sending_fills_in_order() {
        let perm = Relabeling::sending(4, &[3, 4], &[1, 2]).unwrap();
        assert_eq!(
            (1..=4).map(|i| perm.image(i)).collect::<Vec<_>>(),
            vec![3, 4, 1, 2]
        );
    }

    #[test]
    fn concat_and_embed() {
        let net = Network::new(3, vec![half_swap(1, 2)]).unwrap();
        assert_eq!(net.concat(&Network::empty(3)).unwrap(), net);
        assert!(net.concat(&Network::empty(4)).is_err());
        let big = net.embed(5).unwrap();
        assert_eq!(big.n(), 5);
        assert!(net.embed(2).is_err());
    }

    #[test]
    fn decode_rejects_bad_documents() {
        let same = r#"{"convention":"execution-order","n":3,"swaps":[{"a":2,"b":2,"p":{"rat":{"num":"1","den":"2"}}}]}"#;
        assert!(matches!(
            Network::decode(same.as_bytes()),
            Err(NetworkError::DegenerateSwap(2))
        ));
        let big_p = r#"{"convention":"execution-order","n":3,"swaps":[{"a":1,"b":2,"p":{"rat":{"num":"3","den":"2"}}}]}"#;
        assert!(Network::decode(big_p.as_bytes()).is_err());
        let range = r#"{"convention":"execution-order","n":3,"swaps":[{"a":1,"b":4,"p":{"rat":{"num":"1","den":"2"}}}]}"#;
        assert!(matches!(
            Network::decode(range.as_bytes()),
            Err(NetworkError::LabelOutOfRange { label: 4, n: 3 })
        ));
        let convention = r#"{"convention":"product-order","n":3,"swaps":[]}"#;
        assert!(matches!(
            Network::decode(convention.as_bytes()),
            Err(NetworkError::Convention(_))
        ));
        let missing = r#"{"n":3,"swaps":[]}"#;
        assert!(Network::decode(missing.as_bytes()).is_err());
    }

    #[test]
    fn encode_decode_round_trip() {
        let net = Network::from_triples(
            4,
            [(1, 2, rat(1, 3).unwrap()), (4, 2, rat(2, 7).unwrap())],
        )
        .unwrap();
        assert_eq!(Network::decode(&net.encode()).unwrap(), net);
    }

    #[test]
    fn seq_format() {
        let seq = TranspositionSeq::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let text = String::from_utf8(seq.encode()).unwrap();
        assert_eq!(text, r#"{"n":3,"swaps":[[1,2],[2,3]]}"#);
        assert_eq!(TranspositionSeq::decode(text.as_bytes()).unwrap(), seq);
        assert!(TranspositionSeq::decode(br#"{"n":2,"swaps":[[1,3]]}"#).is_err());
    }
}
