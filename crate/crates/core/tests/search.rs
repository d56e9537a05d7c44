use shufflenet::network::{Label, TranspositionSeq};
use shufflenet::search::{certify_minimality, exhaust_reach2, outcome_sequence, Minimality, Outcome, SearchOptions};
use shufflenet::verify::{check_reachability, reach_digraph};

/// Does any sequence of exactly `length` transpositions complete the digraph?
/// Plain enumeration, no pruning.
fn brute_force(n: u32, length: usize) -> bool {
    let moves: Vec<(Label, Label)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let total = moves.len().pow(length as u32);
    (0..total).any(|mut code| {
        let pairs: Vec<_> = (0..length)
            .map(|_| {
                let m = moves[code % moves.len()];
                code /= moves.len();
                m
            })
            .collect();
        reach_digraph(&TranspositionSeq::new(n, pairs).unwrap()).is_complete()
    })
}

#[test]
fn search_agrees_with_enumeration() {
    for n in 2..=4 {
        for length in 0..=5 {
            let report = exhaust_reach2(n, length, SearchOptions::default()).unwrap();
            let found = matches!(report.outcome, Outcome::Found(_));
            assert_eq!(found, brute_force(n, length), "n={n} length={length}");
        }
    }
}

#[test]
fn found_sequences_check_out() {
    for n in 2..=6 {
        let length = (3 * n as usize).div_ceil(2) - 2;
        let report = exhaust_reach2(n, length, SearchOptions::default()).unwrap();
        let seq = outcome_sequence(n, &report.outcome).expect("construction length suffices");
        assert!(seq.len() <= length);
        assert!(check_reachability(&seq).pass);
    }
}

#[test]
fn success_is_monotone_in_length() {
    for n in 3..=5 {
        let found: Vec<bool> = (0..=7)
            .map(|l| {
                matches!(
                    exhaust_reach2(n, l, SearchOptions::default()).unwrap().outcome,
                    Outcome::Found(_)
                )
            })
            .collect();
        assert!(found.windows(2).all(|w| w[0] <= w[1]), "n={n}: {found:?}");
    }
}

#[test]
fn construction_is_minimal_for_small_n() {
    for n in 2..=7 {
        let report = certify_minimality(n, SearchOptions::default()).unwrap();
        assert_eq!(report.verdict, Minimality::Minimal, "{}", report.to_json());
        assert!(report.construction_passes);
    }
}

#[test]
fn parallel_split_agrees() {
    let opts = SearchOptions { max_nodes: None, jobs: 2 };
    let a = exhaust_reach2(5, 5, opts).unwrap();
    let b = exhaust_reach2(5, 5, SearchOptions::default()).unwrap();
    assert_eq!(a.outcome, b.outcome);
    assert_eq!(a.outcome, Outcome::Exhausted);
}
