//! The executable descent: triples from a solution and the steps that shrink them.

use cubesum::constructors::{descent_step, descent_trace, triple_from_solution, DescentOutcome};
use cubesum::{EisensteinInt, KElement};

pub fn run_example() {
    let m = EisensteinInt::from_int(9);
    let (x, y) = (KElement::from_int(2), KElement::from_int(1));
    let t = triple_from_solution(&x, &y, &m).unwrap();
    println!("triple for 2^3 + 1^3 = 9: {t}");

    let trace = descent_trace(&x, &y, &m, 16).unwrap();
    for line in trace.to_json_lines() {
        println!("{line}");
    }
    println!("end: {:?}", trace.end);

    // (r, s) = (2, 1): A = 8, B = 1, C = -9
    let t = cubesum::constructors::Triple::new(
        EisensteinInt::from_int(8),
        EisensteinInt::from_int(1),
        EisensteinInt::from_int(-9),
        EisensteinInt::from_int(-9),
    )
    .unwrap();
    match descent_step(&t).unwrap() {
        DescentOutcome::Step { from, to, .. } => println!("{from} -> {to}"),
        DescentOutcome::Terminal(t) => println!("terminal {t}"),
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
