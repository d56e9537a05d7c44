//! The reachability digraph of a transposition sequence and its clique
//! potential.

use shufflenet::certificates::clique_certificate;
use shufflenet::constructions::reach2;
use shufflenet::verify::{check_reachability, reach_history};

fn main() {
    let seq = reach2(6).unwrap();
    println!("reach2(6) = {:?}", seq.pairs());
    for (t, g) in reach_history(&seq).iter().enumerate() {
        println!("G_{t}: {:2} edges", g.edge_count());
    }
    assert!(check_reachability(&seq).pass);

    let trace = clique_certificate(&seq).unwrap();
    for s in &trace.steps {
        println!("t={} f1={} f2={} F={}", s.t, s.f1, s.f2, s.big_f);
    }
    println!("no sequence reaching everything is shorter than {}", trace.implied_lower_bound);
}
