//! Theorem-cited verdicts over Q and K.

use cubesum::{classify, KElement, Scope, SearchBudget};

pub fn run_example() {
    let budget = SearchBudget::default();
    let cases = [
        ("2", Scope::Q),
        ("4", Scope::Q),
        ("6", Scope::Q),
        ("21", Scope::Q),
        ("183", Scope::Q),
        ("1", Scope::K),
        ("3", Scope::K),
        ("18", Scope::K),
        ("18*w", Scope::K),
        ("5*u+2*v", Scope::K),
        ("1+9*w", Scope::K),
        ("7/8", Scope::Q),
    ];
    for (m, scope) in cases {
        let m: KElement = m.parse().unwrap();
        let v = classify(&m, scope, &budget).unwrap();
        println!("{m} over {scope}: {v}");
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
