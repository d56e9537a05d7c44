//! A nice division shuffle: irrational probabilities, interval-certified.

use shufflenet::constructions::{division_levels, nice_division};
use shufflenet::verify::{check_division, check_strong1, CheckOptions};

fn main() {
    let n: u32 = std::env::args().nth(1).map_or(24, |s| s.parse().expect("an even size"));
    let net = nice_division(n).unwrap();
    println!("division({n}): {} swaps, rational: {}", net.len(), net.is_rational());
    for (m, q) in division_levels(n).unwrap() {
        println!("  doubling from {m}: q = {q}");
    }
    let opts = CheckOptions::with_tol(1e-9);
    let v = check_division(&net, opts).unwrap();
    println!("{}", v.to_json());
    let s = check_strong1(&net, opts);
    println!("strong1: pass={} width={:?}", s.pass, s.max_interval_width);
}
