//! Bounded witness searches over Q and K.

use cubesum::search::{relation_search, search_eisenstein, search_rational};
use cubesum::EisensteinInt;
use num_bigint::BigInt;

pub fn run_example() {
    for m in [6, 7, 9, 17] {
        let hits = search_rational(&BigInt::from(m), 25);
        println!("{m}: {} rational witnesses, first {:?}", hits.len(), hits.first().map(|(x, y)| format!("({x}, {y})")));
    }

    let m: EisensteinInt = "18*w".parse().unwrap();
    for (x, y) in search_eisenstein(&m, 4, 1).iter().take(3) {
        println!("18w = ({x})^3 + ({y})^3");
    }

    let m = EisensteinInt::new(1, 9);
    if let Some((r, s, t)) = relation_search(&m, 12) {
        println!("w*({r})^3 + w^2*({s})^3 + (1+9w)*({t})^3 = 0");
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
