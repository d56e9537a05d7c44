//! Heaviest-transversal trace: each swap costs at most a factor 4, so a
//! strong (1, n)-shuffle needs at least log4(n^n) swaps.

use shufflenet::certificates::transversal_certificate;
use shufflenet::constructions::{hypercube_strong1, strong1};

fn main() {
    let cube = transversal_certificate(&hypercube_strong1(3).unwrap());
    for s in &cube.steps {
        println!("t={:2} g={:<12} alpha={:?}", s.t, s.g, s.alpha);
    }
    println!("hypercube(8): bound {}", cube.implied_lower_bound);

    for n in [10, 20, 40] {
        let net = strong1(n).unwrap();
        let trace = transversal_certificate(&net);
        println!(
            "strong1({n}): length {}, bound {}, exhaustive {}, pass {}",
            net.len(),
            trace.implied_lower_bound,
            trace.exhaustive,
            trace.verdict.pass
        );
    }
}
