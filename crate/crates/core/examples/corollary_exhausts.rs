//! Exhaustive checks: cubes in K without Fermat solutions, no cube progressions,
//! and the points of y^2 = x^3 + 1.

use cubesum::search::{cube_ap_exhaust, flt3_exhaust, mordell_check, square_ap_first};

pub fn run_example() {
    println!("x^3 + y^3 + z^3 = 0 with coordinates up to 10: {:?}", flt3_exhaust(10));
    println!("three cubes in progression up to 300: {:?}", cube_ap_exhaust(300));
    println!("first three squares in progression: {:?}", square_ap_first(10));

    let report = mordell_check(6, 6);
    for (x, y) in &report.rational_hits {
        println!("rational point ({x}, {y}) on y^2 = x^3 + 1");
    }
    println!("{} points over K, {} with x^3 outside {{-1, 0, 8}}", report.field_hits.len(), report.counterexamples.len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
