//! Ring arithmetic in Z[w]: products, norms, Euclidean division and Bezout.

use cubesum::{EisensteinInt, KElement};

pub fn run_example() {
    let beta = EisensteinInt::beta();
    println!("beta = {beta}, beta^2 = {}", beta.pow(2));
    assert_eq!(beta.pow(2), EisensteinInt::from_int(-3));

    // the u, v spelling 5u + 2v is -2 + 3w internally
    let pi: EisensteinInt = "5*u+2*v".parse().unwrap();
    println!("5u+2v = {pi}, norm {}", pi.norm());

    let x = EisensteinInt::new(101, -37);
    let (q, r) = x.divmod(&pi).unwrap();
    println!("{x} = ({q}) * ({pi}) + ({r}), N(r) = {}", r.norm());
    assert!(r.norm() * 3 <= pi.norm());

    let (g, s, t) = EisensteinInt::from_int(7).gcd_ext(&EisensteinInt::new(1, 3)).unwrap();
    println!("gcd(7, 1+3w) = {g} = ({s})*7 + ({t})*(1+3w)");

    let z: KElement = "(2-3*w)/2".parse().unwrap();
    println!("1/z = {}, conj z = {}", z.inverse().unwrap(), z.conj());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
