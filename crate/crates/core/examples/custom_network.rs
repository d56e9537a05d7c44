//! Assemble a network by hand, transform it, and look at its full law.

use shufflenet::network::{Network, Relabeling};
use shufflenet::numeric::ProbScalar;
use shufflenet::verify::full_distribution;

fn main() {
    let half = ProbScalar::half;
    let third = ProbScalar::rat(1, 3).unwrap();
    // swaps act in list order
    let net = Network::from_triples(3, [(1, 2, half()), (1, 3, third), (2, 3, half())]).unwrap();

    let law = full_distribution(&net).unwrap();
    for (images, p) in law.iter() {
        println!("{images:?}: {p}");
    }
    assert_eq!(law.support_size(), 6);

    // reversing the network inverts the random permutation
    let back = full_distribution(&net.reverse()).unwrap();
    assert_eq!(back, law.inverse_pushforward());

    let swapped = net.relabel(&Relabeling::new(vec![3, 1, 2]).unwrap()).unwrap();
    println!("relabelled: {:?}", swapped);

    let text = String::from_utf8(net.encode()).unwrap();
    println!("{text}");
    assert_eq!(Network::decode(text.as_bytes()).unwrap(), net);
}
