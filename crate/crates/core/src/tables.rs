//! Regeneration of the prime tables and comparison with reference values.
//!
//! Every table is recomputed from the criteria on each call. The reference
//! values in [`ExpectedTables`] are used only for diffing, never as output.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::primes_below;
use crate::criteria::{condition_i, exceptional_a, exceptional_b, uv_coordinates};
use crate::error::{Error, Result};
use crate::factorization::split_prime;

/// The four reproducible tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    ConditionI,
    ExcA,
    ExcB,
    ExcAMod9First5,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::ConditionI => "conditionI",
            TableKind::ExcA => "excA",
            TableKind::ExcB => "excB",
            TableKind::ExcAMod9First5 => "excA-mod9-first5",
        }
    }

    /// Range used when `--max` is not given.
    pub fn default_max(self) -> u64 {
        match self {
            TableKind::ConditionI => 73,
            TableKind::ExcA => 200,
            TableKind::ExcB => 100,
            TableKind::ExcAMod9First5 => 0,
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conditionI" => Ok(TableKind::ConditionI),
            "excA" => Ok(TableKind::ExcA),
            "excB" => Ok(TableKind::ExcB),
            "excA-mod9-first5" => Ok(TableKind::ExcAMod9First5),
            _ => Err(Error::parse(s, "expected conditionI, excA, excB or excA-mod9-first5")),
        }
    }
}

/// A row of the condition (I) table: `pi = a*u + b*v` and whether `a + b`
/// is a cube mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionIRow {
    pub p: u64,
    pub a: i64,
    pub b: i64,
    pub sum: i64,
    pub holds: bool,
}

/// An Exceptional A prime with `4p = x^2 + 243 y^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcARow {
    pub p: u64,
    pub x: i64,
    pub y: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Table {
    ConditionI(Vec<ConditionIRow>),
    ExcA(Vec<ExcARow>),
    ExcB(Vec<u64>),
    ExcAMod9First5(Vec<ExcARow>),
}

fn split_primes_upto(max: u64) -> Vec<u64> {
    primes_below(max + 1).into_iter().filter(|p| p % 3 == 1).collect()
}

fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("table entries fit in i64")
}

fn condition_i_row(p: u64) -> ConditionIRow {
    let (a, b) = uv_coordinates(&split_prime(&BigInt::from(p)));
    let holds = condition_i(p).expect("split prime");
    ConditionIRow {
        p,
        a: small(&a),
        b: small(&b),
        sum: small(&(a + b)),
        holds,
    }
}

fn exc_a_row(p: u64) -> Option<ExcARow> {
    let (hit, witness) = exceptional_a(p).expect("split prime");
    hit.then(|| {
        let (x, y) = witness.expect("Exceptional A carries a witness");
        ExcARow { p, x: small(&x), y: small(&y) }
    })
}

pub fn condition_i_table(max: u64) -> Vec<ConditionIRow> {
    split_primes_upto(max).into_par_iter().map(condition_i_row).collect()
}

pub fn exceptional_a_table(max: u64) -> Vec<ExcARow> {
    split_primes_upto(max).into_par_iter().filter_map(exc_a_row).collect()
}

pub fn exceptional_b_table(max: u64) -> Vec<u64> {
    split_primes_upto(max)
        .into_par_iter()
        .filter(|&p| exceptional_b(p).expect("split prime"))
        .collect()
}

/// The first `n` Exceptional A primes with `p = 1 mod 9`.
pub fn exceptional_a_mod9_first(n: usize) -> Vec<ExcARow> {
    let mut out = Vec::new();
    let mut lo = 0u64;
    let mut hi = 1000u64;
    while out.len() < n {
        let chunk: Vec<ExcARow> = split_primes_upto(hi)
            .into_par_iter()
            .filter(|&p| p > lo && p % 9 == 1)
            .filter_map(exc_a_row)
            .collect();
        out.extend(chunk);
        lo = hi;
        hi *= 2;
    }
    out.truncate(n);
    out
}

pub fn generate(kind: TableKind, max: u64) -> Table {
    match kind {
        TableKind::ConditionI => Table::ConditionI(condition_i_table(max)),
        TableKind::ExcA => Table::ExcA(exceptional_a_table(max)),
        TableKind::ExcB => Table::ExcB(exceptional_b_table(max)),
        TableKind::ExcAMod9First5 => Table::ExcAMod9First5(exceptional_a_mod9_first(5)),
    }
}

impl Table {
    pub fn to_json(&self) -> Value {
        match self {
            Table::ConditionI(rows) => json!({ "table": "conditionI", "rows": rows }),
            Table::ExcA(rows) => json!({ "table": "excA", "rows": rows }),
            Table::ExcB(ps) => json!({ "table": "excB", "primes": ps }),
            Table::ExcAMod9First5(rows) => json!({ "table": "excA-mod9-first5", "rows": rows }),
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table::ConditionI(rows) => {
                for r in rows {
                    writeln!(f, "p={}  a={}  b={}  a+b={}  cube={}", r.p, r.a, r.b, r.sum, r.holds)?;
                }
            }
            Table::ExcA(rows) | Table::ExcAMod9First5(rows) => {
                for r in rows {
                    writeln!(f, "p={}  4p={} = {}^2 + 243*{}^2", r.p, 4 * r.p, r.x, r.y)?;
                }
            }
            Table::ExcB(ps) => {
                for p in ps {
                    writeln!(f, "p={p}  3 is a cube mod p")?;
                }
            }
        }
        Ok(())
    }
}

/// Reference values for the tables, with the range each list covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedTables {
    /// `(p, a, b)` with `a + b` implied; rows agree up to swapping `a` and `b`
    /// (the conjugate irreducible).
    pub condition_i: Vec<(u64, i64, i64)>,
    pub condition_i_max: u64,
    /// `(p, x)` with `4p = x^2 + 243`.
    pub exc_a: Vec<(u64, i64)>,
    pub exc_a_max: u64,
    pub exc_b: Vec<u64>,
    pub exc_b_max: u64,
    pub exc_a_mod9_first5: Vec<u64>,
}

impl Default for ExpectedTables {
    fn default() -> Self {
        ExpectedTables {
            condition_i: vec![
                (7, 2, -1),
                (13, -4, -1),
                (19, 5, 2),
                (31, 5, -1),
                (37, -7, -4),
                (43, -7, -1),
                (61, -4, 5),
                (67, -7, 2),
                (73, -1, 8),
            ],
            condition_i_max: 73,
            exc_a: vec![(61, 1), (67, 5), (73, 7), (103, 13), (151, 19), (193, 23)],
            exc_a_max: 200,
            exc_b: vec![61, 67, 73],
            exc_b_max: 100,
            exc_a_mod9_first5: vec![73, 271, 307, 523, 577],
        }
    }
}

impl ExpectedTables {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse("fixture", e.to_string()))
    }
}

/// Differences between a table regenerated up to `max` and the reference
/// values, compared on the range both cover. Empty means agreement.
pub fn diff(table: &Table, max: u64, expected: &ExpectedTables) -> Vec<String> {
    let mut out = Vec::new();
    match table {
        Table::ConditionI(rows) => {
            let limit = max.min(expected.condition_i_max);
            let got: Vec<&ConditionIRow> = rows.iter().filter(|r| r.p <= limit).collect();
            let want: Vec<&(u64, i64, i64)> = expected.condition_i.iter().filter(|e| e.0 <= limit).collect();
            if got.len() != want.len() {
                out.push(format!("conditionI: {} rows regenerated, {} expected", got.len(), want.len()));
            }
            for (r, &&(p, a, b)) in got.iter().zip(want.iter()) {
                let same = r.p == p && ((r.a, r.b) == (a, b) || (r.a, r.b) == (b, a));
                if !same || r.sum != a + b {
                    out.push(format!(
                        "conditionI: got p={} a={} b={} a+b={}, expected p={p} a={a} b={b} a+b={}",
                        r.p, r.a, r.b, r.sum, a + b
                    ));
                }
            }
            for r in rows.iter().filter(|r| !r.holds) {
                out.push(format!("conditionI: a+b={} is not a cube mod p={}", r.sum, r.p));
            }
        }
        Table::ExcA(rows) => {
            let limit = max.min(expected.exc_a_max);
            let got: Vec<(u64, i64)> = rows.iter().filter(|r| r.p <= limit).map(|r| (r.p, r.x.abs())).collect();
            let want: Vec<(u64, i64)> = expected.exc_a.iter().copied().filter(|e| e.0 <= limit).collect();
            if got != want {
                out.push(format!("excA: got {got:?}, expected {want:?}"));
            }
            for r in rows {
                if 4 * r.p as i64 != r.x * r.x + 243 * r.y * r.y {
                    out.push(format!("excA: bad witness for p={}", r.p));
                }
            }
        }
        Table::ExcB(ps) => {
            let limit = max.min(expected.exc_b_max);
            let got: Vec<u64> = ps.iter().copied().filter(|&p| p <= limit).collect();
            let want: Vec<u64> = expected.exc_b.iter().copied().filter(|&p| p <= limit).collect();
            if got != want {
                out.push(format!("excB: got {got:?}, expected {want:?}"));
            }
        }
        Table::ExcAMod9First5(rows) => {
            let got: Vec<u64> = rows.iter().map(|r| r.p).collect();
            if got != expected.exc_a_mod9_first5 {
                out.push(format!("excA-mod9-first5: got {got:?}, expected {:?}", expected.exc_a_mod9_first5));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_tables_reproduce() {
        let e = ExpectedTables::default();
        for kind in [TableKind::ConditionI, TableKind::ExcA, TableKind::ExcB, TableKind::ExcAMod9First5] {
            let t = generate(kind, kind.default_max());
            assert_eq!(diff(&t, kind.default_max(), &e), Vec::<String>::new(), "{}", kind.name());
        }
    }

    #[test]
    fn sums_match() {
        let sums: Vec<i64> = condition_i_table(73).iter().map(|r| r.sum).collect();
        assert_eq!(sums, [1, -5, 7, 4, -11, -8, 1, -5, 7]);
    }

    #[test]
    fn corrupted_reference_is_detected() {
        let mut e = ExpectedTables::default();
        e.exc_b.push(79);
        assert!(!diff(&generate(TableKind::ExcB, 100), 100, &e).is_empty());
        let mut e = ExpectedTables::default();
        e.condition_i[2].2 = 3;
        assert!(!diff(&generate(TableKind::ConditionI, 73), 73, &e).is_empty());
    }

    #[test]
    fn fixture_round_trip() {
        let e = ExpectedTables::default();
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(ExpectedTables::from_json(&text).unwrap(), e);
        assert!(ExpectedTables::from_json("{").is_err());
    }
}
