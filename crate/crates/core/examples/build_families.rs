//! Build one member of every family and compare its length with the bound.
//!
//!     cargo run --example build_families -- 16

use shufflenet::constructions::Family;

fn main() {
    let n: u32 = std::env::args().nth(1).map_or(16, |s| s.parse().expect("a size"));
    let families = [
        Family::Placement,
        Family::KTuple(3),
        Family::U2,
        Family::Hypercube,
        Family::Strong1,
        Family::Reach2,
        Family::Division,
        Family::Strong2,
    ];
    println!("{:<10} {:>6} {:>6}  tight", "family", "length", "bound");
    for family in families {
        if !family.accepts(n) {
            println!("{:<10} (no member on {n} points)", family.name());
            continue;
        }
        let built = family.build(n).unwrap();
        let ledger = family.ledger(n, built.len());
        assert!(ledger.holds());
        println!(
            "{:<10} {:>6} {:>6}  {}",
            family.name(),
            built.len(),
            ledger.bound,
            ledger.tight
        );
    }
}
