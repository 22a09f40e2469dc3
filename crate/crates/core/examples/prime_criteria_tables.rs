//! Condition (I), Exceptional A and B, and the regenerated prime tables.

use cubesum::criteria::prime_report;
use cubesum::tables::{diff, generate, ExpectedTables, TableKind};

pub fn run_example() {
    for p in [7, 19, 61, 79, 97] {
        let r = prime_report(p).unwrap();
        println!("{}", r.to_json());
    }

    let expected = ExpectedTables::default();
    for kind in [TableKind::ConditionI, TableKind::ExcA, TableKind::ExcB, TableKind::ExcAMod9First5] {
        let max = kind.default_max();
        let table = generate(kind, max);
        println!("{}:\n{table}", kind.name());
        assert!(diff(&table, max, &expected).is_empty());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
