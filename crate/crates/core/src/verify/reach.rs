use crate::network::{Label, TranspositionSeq};

/// Largest ground set a [`ReachDigraph`] can hold.
pub const REACH_MAX_N: u32 = 64;

/// Loopless digraph on `[1, n]`: the ordered pairs reachable from `(1, 2)`.
/// Row `i` is a bitmask of the heads `j` with `(i, j)` an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReachDigraph {
    n: u32,
    rows: Vec<u64>,
}

impl ReachDigraph {
    /// `G_0`: the single edge `(1, 2)`.
    pub fn start(n: u32) -> Self {
        assert!((2..=REACH_MAX_N).contains(&n), "reach digraph needs 2 <= n <= 64");
        let mut rows = vec![0u64; n as usize];
        rows[0] = 1 << 1;
        ReachDigraph { n, rows }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_edge(&self, i: Label, j: Label) -> bool {
        self.rows[i as usize - 1] >> (j - 1) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        (1..=self.n).flat_map(move |i| {
            (1..=self.n)
                .filter(move |&j| self.has_edge(i, j))
                .map(move |j| (i, j))
        })
    }

    /// Heads of the edges leaving `i`, as a bitmask (bit `j - 1` for `j`).
    pub fn out_mask(&self, i: Label) -> u64 {
        self.rows[i as usize - 1]
    }

    /// Tails of the edges entering `j`, as a bitmask.
    pub fn in_mask(&self, j: Label) -> u64 {
        let bit = 1u64 << (j - 1);
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| *r & bit != 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// Vertices on at least one edge.
    pub fn covered(&self) -> u64 {
        (1..=self.n).fold(0, |acc, v| {
            if self.rows[v as usize - 1] != 0 || self.in_mask(v) != 0 {
                acc | 1 << (v - 1)
            } else {
                acc
            }
        })
    }

    pub fn out_degree(&self, i: Label) -> u32 {
        self.rows[i as usize - 1].count_ones()
    }

    pub fn in_degree(&self, j: Label) -> u32 {
        self.rows.iter().filter(|r| *r >> (j - 1) & 1 == 1).count() as u32
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == (self.n * (self.n - 1)) as usize
    }

    pub fn is_subset_of(&self, other: &ReachDigraph) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Ordered pairs `i ≠ j` that are not edges.
    pub fn missing(&self) -> impl Iterator<Item = (Label, Label)> + '_ {
        (1..=self.n).flat_map(move |i| {
            (1..=self.n)
                .filter(move |&j| j != i && !self.has_edge(i, j))
                .map(move |j| (i, j))
        })
    }

    /// Add a transposition `(a, b)` acting after everything so far:
    /// * all current edges stay;
    /// * `(a, j)` for every edge `(b, j)`, `j ≠ a`;
    /// * `(j, a)` for every edge `(j, b)`, `j ≠ a`;
    /// * `(b, j)` for every edge `(a, j)`, `j ≠ b`;
    /// * `(j, b)` for every edge `(j, a)`, `j ≠ b`;
    /// * `(a, b)` and `(b, a)` if at least one of them is present.
    pub fn apply(&mut self, a: Label, b: Label) {
        let (ia, ib) = (a as usize - 1, b as usize - 1);
        let (bit_a, bit_b) = (1u64 << ia, 1u64 << ib);
        let old = self.rows.clone();
        self.rows[ia] |= old[ib] & !bit_a;
        self.rows[ib] |= old[ia] & !bit_b;
        for (j, row) in old.iter().enumerate() {
            if j != ia && row & bit_b != 0 {
                self.rows[j] |= bit_a;
            }
            if j != ib && row & bit_a != 0 {
                self.rows[j] |= bit_b;
            }
        }
        if old[ia] & bit_b != 0 || old[ib] & bit_a != 0 {
            self.rows[ia] |= bit_b;
            self.rows[ib] |= bit_a;
        }
    }
}

/// `G_l` for the whole sequence, processed in execution order.
pub fn reach_digraph(seq: &TranspositionSeq) -> ReachDigraph {
    let mut g = ReachDigraph::start(seq.n());
    for &(a, b) in seq.pairs() {
        g.apply(a, b);
    }
    g
}

/// `G_0, G_1, …, G_l`.
pub fn reach_history(seq: &TranspositionSeq) -> Vec<ReachDigraph> {
    let mut g = ReachDigraph::start(seq.n());
    let mut out = vec![g.clone()];
    for &(a, b) in seq.pairs() {
        g.apply(a, b);
        out.push(g.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: u32, pairs: &[(Label, Label)]) -> TranspositionSeq {
        TranspositionSeq::new(n, pairs.to_vec()).unwrap()
    }

    #[test]
    fn empty_sequence_is_single_edge() {
        let g = reach_digraph(&seq(4, &[]));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn single_swap_reverses() {
        let g = reach_digraph(&seq(2, &[(1, 2)]));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        assert!(g.is_complete());
    }

    #[test]
    fn swap_away_from_pair_adds_nothing() {
        let g = reach_digraph(&seq(4, &[(3, 4)]));
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn four_point_construction_completes() {
        let g = reach_digraph(&seq(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]));
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn degrees() {
        let g = reach_digraph(&seq(3, &[(2, 3)]));
        // edges (1,2), (1,3)
        assert_eq!(g.out_degree(1), 2);
        assert_eq!(g.in_degree(3), 1);
        assert_eq!(g.in_degree(1), 0);
    }
}
