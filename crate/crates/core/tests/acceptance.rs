//! Acceptance suite: one pass/fail line per criterion, full-size runs.

use std::process::ExitCode;

use cubesum::tables::ExpectedTables;
use cubesum::verify::{run_criterion, Level, CRITERIA};

fn main() -> ExitCode {
    let expected = ExpectedTables::default();
    let mut failed = Vec::new();
    for (id, _, _) in CRITERIA {
        let result = run_criterion(id, Level::Full, &expected);
        println!("{result}");
        if !result.passed {
            failed.push(id);
        }
    }

    // the harness must notice a wrong reference value
    let mut corrupted = ExpectedTables::default();
    corrupted.exc_b.push(79);
    let sanity = !run_criterion(5, Level::Quick, &corrupted).passed;
    println!("harness sanity {}: corrupted reference table is rejected", if sanity { "PASS" } else { "FAIL" });

    if failed.is_empty() && sanity {
        println!("acceptance: {} of {} criteria pass", CRITERIA.len(), CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
