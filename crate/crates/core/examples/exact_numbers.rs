//! Exact rationals, quadratic surds and certified enclosures.

use shufflenet::numeric::{solve_division_q, ProbScalar, Rational, Scalar};

fn main() {
    let third = ProbScalar::rat(1, 3).unwrap();
    println!("1/3 encloses as {}", third.enclosure(128));

    // the cross-swap probability of the size-8 division step
    let q = solve_division_q(8).unwrap();
    println!("q = {q} ~ {:.12}", q.value().approx());

    // q(1 - q) stays exact: both factors live in the same quadratic field
    let product = q.value().mul(q.complement().value());
    println!("q(1-q) = {}", product.exact().unwrap());
    assert_eq!(*product.exact().unwrap(), Scalar::rat(8, 60).unwrap());

    // mixing radicands falls back to an interval
    let other = solve_division_q(6).unwrap();
    let mixed = q.value().add(other.value());
    println!("q8 + q6 has no exact form here: {:?}", mixed.exact());
    println!("enclosure: {}", mixed.enclosure(128));

    let r = Rational::new(-355, 113).unwrap();
    let (num, den) = r.to_strings();
    assert_eq!(Rational::from_strings(&num, &den).unwrap(), r);

    assert!(ProbScalar::rat(3, 2).is_err());
}
