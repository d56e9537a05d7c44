use shufflenet::certificates::*;
use shufflenet::constructions::*;

#[test]
fn rank_trace_of_u2_is_tight() {
    for n in 2..=9u32 {
        let trace = rank_certificate(&u2_shuffle(n).unwrap(), 1, 2).unwrap();
        assert!(trace.verdict.pass, "{:?}", trace.verdict);
        assert_eq!(trace.endpoints.initial, 3);
        assert_eq!(trace.endpoints.last, 2 * n as usize);
        assert_eq!(trace.implied_lower_bound, 2 * n as u64 - 3);
        assert!(trace.steps.iter().all(|s| s.identity_holds));
    }
    let five = rank_certificate(&u2_shuffle(5).unwrap(), 1, 2).unwrap();
    assert_eq!(five.steps.len(), 8);
    assert!(five.steps[1..].iter().all(|s| s.increment == Some(1)));
}

#[test]
fn rank_increments_on_other_networks() {
    for n in 2..=8 {
        for net in [strong1(n).unwrap(), k_tuple_shuffle(n, n).unwrap()] {
            for (x, y) in [(1, 2), (n, 1)] {
                let trace = rank_certificate(&net, x, y).unwrap();
                assert!(trace.verdict.pass, "n={n}: {:?}", trace.verdict);
            }
        }
    }
}

#[test]
fn transversal_on_hypercubes() {
    let trace = transversal_certificate(&hypercube_strong1(2).unwrap());
    assert_eq!(trace.endpoints.initial, "1");
    assert_eq!(trace.endpoints.last, "1/256");
    assert!(trace.exhaustive && trace.final_is_uniform && trace.verdict.pass);
    assert_eq!(trace.implied_lower_bound, 4);
    let trace = transversal_certificate(&hypercube_strong1(3).unwrap());
    assert_eq!(trace.implied_lower_bound, 12);
    let trace = transversal_certificate(&hypercube_strong1(4).unwrap());
    assert!(!trace.exhaustive && trace.final_is_uniform && trace.verdict.pass);
    assert_eq!(trace.implied_lower_bound, 32);
}

#[test]
fn transversal_on_strong1() {
    for n in 2..=20 {
        let net = strong1(n).unwrap();
        let trace = transversal_certificate(&net);
        assert!(trace.verdict.pass && trace.final_is_uniform, "n={n}");
        assert!(trace.implied_lower_bound as usize <= net.len());
    }
}

#[test]
fn transversal_on_surd_network() {
    let trace = transversal_certificate(&nice_division(8).unwrap());
    assert!(trace.verdict.pass && trace.final_is_uniform);
}

#[test]
fn clique_traces_of_reach2() {
    let four = clique_certificate(&reach2(4).unwrap()).unwrap();
    assert_eq!((four.endpoints.initial, four.endpoints.last), (2.0, 6.0));
    assert_eq!(four.implied_lower_bound, 4);
    assert!(four.steps[1..].iter().all(|s| s.increment == Some(1.0)));
    let six = clique_certificate(&reach2(6).unwrap()).unwrap();
    assert_eq!(six.endpoints.last, 9.0);
    for n in 2..=12 {
        let trace = clique_certificate(&reach2(n).unwrap()).unwrap();
        assert!(trace.verdict.pass && trace.complete);
        assert_eq!(trace.endpoints.last, 1.5 * n as f64);
    }
    assert!(clique_certificate(&reach2(17).unwrap()).is_err());
}
