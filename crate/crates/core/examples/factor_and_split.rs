//! Prime classification, splitting and unique factorization.

use cubesum::{classify_rational_prime, factor, EisensteinInt, PrimeClass};

pub fn run_example() {
    for p in [2, 3, 7, 13, 73, 1_000_003] {
        match classify_rational_prime(p).unwrap() {
            PrimeClass::Split { pi, pi_bar } => println!("{p}: split as ({pi})({pi_bar})"),
            PrimeClass::Inert => println!("{p}: inert"),
            PrimeClass::Ramified => println!("{p}: ramified, -(1+2*w)^2"),
        }
    }

    for s in ["18*w", "183", "1+9*w", "-1001+17*w"] {
        let x: EisensteinInt = s.parse().unwrap();
        let f = factor(&x).unwrap();
        println!("{x} = {f}");
        assert_eq!(f.reconstruct(), x);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
