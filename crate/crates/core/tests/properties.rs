use proptest::prelude::*;

use shufflenet::certificates::{clique_certificate, rank_certificate, transversal_certificate};
use shufflenet::network::{Label, Network, TranspositionSeq};
use shufflenet::numeric::{Interval, ProbScalar, Rational};
use shufflenet::verify::{
    full_distribution, prepare, propagate_marginal, propagate_pair, reach_history,
};

fn swap_pair(n: u32) -> impl Strategy<Value = (Label, Label)> {
    (1..=n, 1..n).prop_map(move |(a, d)| (a, (a - 1 + d) % n + 1))
}

fn prob() -> impl Strategy<Value = ProbScalar> {
    (0i64..=6, 1i64..=6).prop_map(|(a, b)| {
        let den = a.max(b);
        ProbScalar::rat(a.min(den), den).unwrap()
    })
}

fn network(max_n: u32, max_len: usize) -> impl Strategy<Value = Network> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((swap_pair(n), prob()), 0..=max_len).prop_map(move |swaps| {
            Network::from_triples(n, swaps.into_iter().map(|((a, b), p)| (a, b, p))).unwrap()
        })
    })
}

fn sequence(max_n: u32, max_len: usize) -> impl Strategy<Value = TranspositionSeq> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(swap_pair(n), 0..=max_len)
            .prop_map(move |pairs| TranspositionSeq::new(n, pairs).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn marginals_are_doubly_stochastic(net in network(7, 14)) {
        let steps = prepare::<Rational>(&net, 128).unwrap();
        let m = propagate_marginal(net.n() as usize, &steps);
        for s in m.row_sums().into_iter().chain(m.col_sums()) {
            prop_assert_eq!(s, Rational::one());
        }
    }

    #[test]
    fn engines_agree_with_full_distribution(net in network(5, 10), x in 1u32..=5, dy in 1u32..5) {
        let n = net.n();
        let x = (x - 1) % n + 1;
        let y = (x - 1 + 1 + dy % (n - 1)) % n + 1;
        let full = full_distribution(&net).unwrap();
        prop_assert_eq!(full.total(), Rational::one());
        let steps = prepare::<Rational>(&net, 128).unwrap();
        let m = propagate_marginal(n as usize, &steps);
        for (image, w) in full.tuple_marginal(&[x]) {
            prop_assert_eq!(m.get(x, image[0]), &w);
        }
        let pairs = propagate_pair(n as usize, &steps, x, y);
        let from_full = full.tuple_marginal(&[x, y]);
        for ((i, j), w) in pairs.entries() {
            let expected = from_full.get(&vec![i, j]).cloned().unwrap_or_else(Rational::zero);
            prop_assert_eq!(w, &expected);
        }
    }

    #[test]
    fn reverse_is_inverse_pushforward(net in network(5, 10)) {
        let forward = full_distribution(&net).unwrap();
        let backward = full_distribution(&net.reverse()).unwrap();
        prop_assert_eq!(backward, forward.inverse_pushforward());
    }

    #[test]
    fn intervals_enclose_exact_values(net in network(7, 14)) {
        let n = net.n() as usize;
        let exact = propagate_marginal(n, &prepare::<Rational>(&net, 128).unwrap());
        let approx = propagate_marginal(n, &prepare::<Interval>(&net, 128).unwrap());
        for ((i, j), w) in exact.entries() {
            prop_assert!(approx.get(i, j).contains_rational(w));
        }
    }

    #[test]
    fn encoding_round_trips(net in network(7, 14)) {
        prop_assert_eq!(Network::decode(&net.encode()).unwrap(), net);
    }

    #[test]
    fn reach_digraphs_only_grow(seq in sequence(12, 20)) {
        let history = reach_history(&seq);
        for w in history.windows(2) {
            prop_assert!(w[0].is_subset_of(&w[1]));
        }
    }

    #[test]
    fn clique_potential_rises_at_most_one(seq in sequence(10, 16)) {
        let trace = clique_certificate(&seq).unwrap();
        prop_assert!(trace.verdict.pass, "{:?}", trace.verdict);
        prop_assert_eq!(trace.endpoints.initial, 2.0);
    }

    #[test]
    fn rank_potential_rises_at_most_one(net in network(6, 12)) {
        let trace = rank_certificate(&net, 1, 2).unwrap();
        prop_assert!(trace.verdict.pass, "{:?}", trace.verdict);
        prop_assert!(trace.steps.iter().all(|s| s.identity_holds));
        prop_assert_eq!(trace.endpoints.initial, 3);
    }

    #[test]
    fn transversal_drops_at_most_factor_four(net in network(7, 14)) {
        let trace = transversal_certificate(&net);
        prop_assert!(trace.steps.iter().skip(1).all(|s| s.increment_log2.unwrap() >= -2.0 - 1e-9));
    }
}
