//! Run the uniformity checks, including one that fails with a witness.

use shufflenet::constructions::{k_tuple_shuffle, placement_chain, strong1, strong2, u2_shuffle};
use shufflenet::verify::{
    check_full_uniform, check_pair_uniform, check_strong1, check_strong2, CheckOptions,
};

fn main() {
    let opts = CheckOptions::default();

    let v = check_strong1(&strong1(12).unwrap(), opts);
    println!("strong1(12): pass={} mode={:?}", v.pass, v.mode);

    let v = check_pair_uniform(&u2_shuffle(9).unwrap(), 1, 2, opts).unwrap();
    println!("u2(9) from (1,2): pass={}", v.pass);

    let v = check_strong2(&strong2(10).unwrap(), opts);
    println!("strong2(10): pass={} max width={:?}", v.pass, v.max_interval_width);

    let v = check_full_uniform(&k_tuple_shuffle(5, 5).unwrap(), opts).unwrap();
    println!("ktuple(5,5) on all of S_5: pass={}", v.pass);

    // a placement chain only places one element
    let v = check_strong1(&placement_chain(5, 5).unwrap(), opts);
    assert!(!v.pass);
    println!("placement(5) as strong1:\n{}", v.to_json());
}
