//! Exhaustive search: nothing shorter than the construction reaches every
//! ordered pair.

use shufflenet::search::{certify_minimality, exhaust_reach2, SearchOptions};

fn main() {
    let opts = SearchOptions::default();
    for n in 2..=7 {
        let r = certify_minimality(n, opts).unwrap();
        println!(
            "n={n}: length {} {:?} ({} nodes, {:.1} ms)",
            r.target_length, r.verdict, r.nodes, r.elapsed_ms
        );
    }
    let found = exhaust_reach2(5, 6, opts).unwrap();
    println!("{}", serde_json::to_string(&found.outcome).unwrap());

    let capped = SearchOptions {
        max_nodes: Some(100),
        ..opts
    };
    println!("{:?}", exhaust_reach2(7, 8, capped).unwrap().outcome);
}
