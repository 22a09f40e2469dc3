//! Lucas identity witnesses for 3p with p = 61, 67, 73, plus tangent and secant steps.

use cubesum::constructors::{lucas_pair, lucas_witness, secant_step, tangent_step};
use cubesum::KElement;
use num_bigint::BigInt;

pub fn run_example() {
    let (x, y) = lucas_pair(64, -3);
    println!("lucas_pair(64, -3) = ({x}, {y})");

    for (a, b, m) in [(64, -3, 183), (64, 3, 201), (81, -8, 219)] {
        let (x, y) = lucas_witness(a, b, &BigInt::from(m)).unwrap();
        println!("{m} = ({x})^3 + ({y})^3");
    }

    let m = KElement::from_int(7);
    let p = (KElement::from_int(2), KElement::from_int(-1));
    let t = tangent_step(&m, &p).unwrap();
    println!("tangent at (2, -1) on x^3 + y^3 = 7: ({}, {})", t.0, t.1);
    let q: (KElement, KElement) = ("5/3".parse().unwrap(), "4/3".parse().unwrap());
    let s = secant_step(&m, &p, &q).unwrap();
    println!("secant through (2, -1) and (5/3, 4/3): ({}, {})", s.0, s.1);
    assert_eq!(&s.0.cube() + &s.1.cube(), m);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
