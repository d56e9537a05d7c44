//! Rank trace of the pair shuffle: the potential climbs from 3 to 2n, one
//! step at a time at most.

use shufflenet::certificates::rank_certificate;
use shufflenet::constructions::u2_shuffle;

fn main() {
    let n = 7;
    let trace = rank_certificate(&u2_shuffle(n).unwrap(), 1, 2).unwrap();
    for s in &trace.steps {
        println!(
            "t={:2} support={} rank={} f={:2} identity={}",
            s.t, s.support, s.rank, s.f, s.identity_holds
        );
    }
    println!(
        "f: {} -> {}, so at least {} swaps (the network has {})",
        trace.endpoints.initial,
        trace.endpoints.last,
        trace.implied_lower_bound,
        trace.steps.len() - 1
    );
}
