//! End-to-end self-check: one pass/fail result per acceptance criterion.
//!
//! `Quick` scales the two long scans down (reciprocity to `p < 1000`, the
//! Kummer exhaust to bound 10); `Full` runs them at full size.

use std::collections::BTreeSet;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arith::primes_below;
use crate::classifier::{classify, Scope, Status, TheoremTag, Verdict};
use crate::constructors::{cube_triple_structure, descent_step, lucas_pair, lucas_witness, DescentOutcome, Point, Triple};
use crate::criteria::{condition_i, exceptional_a, exceptional_b};
use crate::eisenstein::{EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::factorization::{factor, unit_times_cube};
use crate::kelement::KElement;
use crate::search::{cube_ap_exhaust, flt3_exhaust, mordell_check, relation_search, search_rational, SearchBudget};
use crate::tables::{diff, generate, ExpectedTables, TableKind};

/// Seed shared by every randomized check.
pub const SEED: u64 = 0x5EED_C0BE;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::parse(s, "expected quick or full")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "Euler/Legendre verdicts over Q", 10),
    (2, "Kummer exhaust and the six axis solutions of 1", 60),
    (3, "Lucas constructions for 183, 201, 219", 1),
    (4, "condition (I) table", 60),
    (5, "Exceptional A and B sets", 5),
    (6, "reciprocity instance checks", 60),
    (7, "theorem grid", 60),
    (8, "associate asymmetries", 30),
    (9, "corollary exhausts", 60),
    (10, "property suites", 300),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl CriterionResult {
    pub fn to_json(&self) -> Value {
        json!({
            "criterion": self.id,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed_ms": self.elapsed.as_millis() as u64,
            "limit_ms": self.limit.as_millis() as u64,
        })
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {} ({} ms): {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed.as_millis(),
            self.detail
        )
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub level: Level,
    pub results: Vec<CriterionResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level.to_string(),
            "passed": self.passed(),
            "criteria": self.results.iter().map(CriterionResult::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        let failed: Vec<String> = self.results.iter().filter(|r| !r.passed).map(|r| r.id.to_string()).collect();
        if failed.is_empty() {
            write!(f, "verify {}: all {} criteria pass", self.level, self.results.len())
        } else {
            write!(f, "verify {}: failed criteria {}", self.level, failed.join(", "))
        }
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn k(s: &str) -> KElement {
    s.parse().expect("literal parses")
}

fn kv(x: &EisensteinInt) -> KElement {
    KElement::from_eint(x.clone())
}

fn point(x: &str, y: &str) -> Point {
    (k(x), k(y))
}

fn run(m: &KElement, scope: Scope, budget: &SearchBudget) -> std::result::Result<Verdict, String> {
    lib(classify(m, scope, budget))
}

fn criterion_1() -> Check {
    let budget = SearchBudget::default();
    let v = run(&k("2"), Scope::Q, &budget)?;
    ensure(v.status == Status::OnlyTrivial(vec![point("1", "1")]), || format!("M=2: {v}"))?;
    for m in ["3", "4", "5"] {
        let v = run(&k(m), Scope::Q, &budget)?;
        ensure(v.status == Status::NoSolutions, || format!("M={m}: {v}"))?;
    }
    let b25 = SearchBudget { denom_bound: 25, ..budget };
    let v = run(&k("6"), Scope::Q, &b25)?;
    ensure(v.status == Status::HasSolutions(point("37/21", "17/21")), || format!("M=6: {v}"))?;
    let hits = search_rational(&BigInt::from(7), 5);
    for w in [point("2", "-1"), point("4/3", "5/3")] {
        ensure(hits.contains(&w), || format!("M=7: missing ({}, {})", w.0, w.1))?;
    }
    Ok("2 -> {(1,1)}; 3,4,5 -> NoSolutions; 6 -> (37/21,17/21); 7 -> (2,-1), (4/3,5/3)".into())
}

fn criterion_2(level: Level) -> Check {
    let bound = if level == Level::Full { 30 } else { 10 };
    ensure(flt3_exhaust(bound).is_none(), || format!("flt3_exhaust({bound}) found a solution"))?;
    let v = run(&k("1"), Scope::K, &SearchBudget::default())?;
    let mut axis = Vec::new();
    for z in Unit::CUBE_ROOTS {
        axis.push((kv(&z.to_eint()), KElement::zero()));
        axis.push((KElement::zero(), kv(&z.to_eint())));
    }
    let want: BTreeSet<Point> = axis.into_iter().collect();
    match &v.status {
        Status::OnlyTrivial(s) if s.iter().cloned().collect::<BTreeSet<_>>() == want && s.len() == 6 => {}
        _ => return Err(format!("classify(1, K): {v}")),
    }
    Ok(format!("flt3_exhaust({bound}) empty; 1 over K has exactly the six axis solutions"))
}

fn criterion_3() -> Check {
    let (x, y) = lucas_pair(64, -3);
    ensure((x.clone(), y.clone()) == (BigInt::from(190171), BigInt::from(-295579)), || format!("lucas_pair(64,-3) = ({x}, {y})"))?;
    let lhs = x.pow(3) + y.pow(3);
    ensure(lhs == BigInt::from(-183) * BigInt::from(46956).pow(3), || "x^3 + y^3 != -183 * 46956^3".into())?;
    let w = lib(lucas_witness(64, -3, &BigInt::from(183)))?;
    ensure(w == point("-190171/46956", "295579/46956"), || format!("183 witness ({}, {})", w.0, w.1))?;
    for (a, b, m) in [(64, -3, 183), (64, 3, 201), (81, -8, 219)] {
        let w = lib(lucas_witness(a, b, &BigInt::from(m)))?;
        ensure(&w.0.cube() + &w.1.cube() == KElement::from_int(m) && w.0.is_rational(), || format!("witness for {m} fails"))?;
    }
    Ok("(190171, -295579); 183, 201, 219 witnesses re-verify".into())
}

fn table_check(kinds: &[TableKind], expected: &ExpectedTables) -> Check {
    let mut problems = Vec::new();
    for &kind in kinds {
        let max = kind.default_max();
        problems.extend(diff(&generate(kind, max), max, expected));
    }
    if problems.is_empty() {
        Ok(format!("{} regenerated and matched", kinds.iter().map(|k| k.name()).collect::<Vec<_>>().join(", ")))
    } else {
        Err(problems.join("; "))
    }
}

fn criterion_6(level: Level) -> Check {
    let max = if level == Level::Full { 5000 } else { 1000 };
    let primes: Vec<u64> = primes_below(max).into_iter().filter(|p| p % 3 == 1).collect();
    for &p in &primes {
        ensure(lib(condition_i(p))?, || format!("condition (I) fails for p={p}"))?;
        let a = lib(exceptional_a(p))?.0;
        let b = lib(exceptional_b(p))?;
        ensure(a == b, || format!("p={p}: Exceptional A {a}, Exceptional B {b}"))?;
    }
    Ok(format!("{} primes p = 1 mod 3 below {max}", primes.len()))
}

/// The grid of inputs with the theorem each must be decided by.
pub fn theorem_grid() -> Vec<(EisensteinInt, TheoremTag)> {
    let e = |n: i64| EisensteinInt::from_int(n);
    let w = EisensteinInt::omega();
    let v = EisensteinInt::omega_sq();
    let pi7 = EisensteinInt::new(1, 3);
    let pi19 = EisensteinInt::from_uv(5, 2);
    let mut grid = vec![
        (e(5), TheoremTag::T1_3),
        (e(25), TheoremTag::T1_3),
        (&e(2) * &w, TheoremTag::T1_3),
        (w.clone(), TheoremTag::T1_6),
        (e(3), TheoremTag::T1_7),
        (&w * &EisensteinInt::beta(), TheoremTag::T1_7),
        (e(45), TheoremTag::T2_1),
        (e(9 * 121), TheoremTag::T2_1),
        (&e(7) * &w, TheoremTag::T2_2),
        (&e(49) * &w, TheoremTag::T2_2),
        (&e(13) * &w, TheoremTag::T2_2),
        (pi19, TheoremTag::T2_4),
    ];
    for base in [pi7.clone(), pi7.pow(2)] {
        for unit in [EisensteinInt::one(), w.clone(), v.clone()] {
            grid.push((&base * &unit, TheoremTag::T1_4));
        }
    }
    for p in [7, 13, 19, 31, 37, 43] {
        grid.push((e(3 * p), TheoremTag::T2_3));
        grid.push((e(3 * p * p), TheoremTag::T2_3));
    }
    grid
}

fn criterion_7() -> Check {
    let budget = SearchBudget::default();
    let grid = theorem_grid();
    for (m, tag) in &grid {
        let v = run(&kv(m), Scope::K, &budget)?;
        ensure(v.status == Status::NoSolutions && v.rule.tag == Some(*tag), || format!("{m}: expected NoSolutions [{tag}], got {v}"))?;
        let fired = crate::classifier::matching_patterns(&v.canonical).len();
        ensure(fired == 1, || format!("{m}: {fired} rules fire"))?;
    }
    Ok(format!("{} inputs decided by the expected theorem", grid.len()))
}

fn criterion_8() -> Check {
    let budget = SearchBudget::default();
    let w = EisensteinInt::omega();
    let v18u = run(&kv(&(&EisensteinInt::from_int(18) * &w)), Scope::K, &budget)?;
    ensure(v18u.status == Status::HasSolutions(point("3+2*w", "1")), || format!("18w: {v18u}"))?;
    let v18 = run(&k("18"), Scope::K, &budget)?;
    ensure(v18.status == Status::NoSolutions && v18.rule.tag == Some(TheoremTag::T2_1), || format!("18: {v18}"))?;
    let pi = EisensteinInt::from_uv(5, 2);
    let vpi = run(&kv(&pi), Scope::K, &budget)?;
    ensure(vpi.status == Status::NoSolutions && vpi.rule.tag == Some(TheoremTag::T2_4), || format!("5u+2v: {vpi}"))?;
    for unit in [Unit::OMEGA, Unit::OMEGA_SQ] {
        let m = kv(&pi.mul_unit(unit));
        let v = run(&m, Scope::K, &budget)?;
        let ok = matches!(&v.status, Status::HasSolutions((x, y)) if &(&x.cube() + &y.cube()) == &m);
        ensure(ok, || format!("{unit}*(5u+2v): {v}"))?;
    }
    let m = EisensteinInt::new(1, 9);
    let v = run(&kv(&m), Scope::K, &budget)?;
    ensure(v.rule.name == "relation-search" && v.status == Status::HasSolutions(point("(2-3*w)/2", "(-3-6*w)/2")), || format!("1+9w: {v}"))?;
    let rel = relation_search(&m, budget.relation_bound).ok_or("no relation for 1+9w")?;
    let two = EisensteinInt::from_int(2);
    let one = EisensteinInt::one();
    let expected = (two.clone(), -one.clone(), -one.clone());
    let negated = (-two, one.clone(), one);
    ensure(rel == expected || rel == negated, || format!("relation for 1+9w: ({}, {}, {})", rel.0, rel.1, rel.2))?;
    Ok("18w solvable, 18 not; twists of 5u+2v solvable, 5u+2v not; 1+9w via relation".into())
}

fn criterion_9() -> Check {
    ensure(cube_ap_exhaust(1000).is_none(), || "cube_ap_exhaust(1000) found a progression".into())?;
    let rep = mordell_check(6, 6);
    let want: BTreeSet<Point> = [("-1", "0"), ("0", "1"), ("0", "-1"), ("2", "3"), ("2", "-3")]
        .iter()
        .map(|(x, y)| point(x, y))
        .collect();
    let got: BTreeSet<Point> = rep.rational_hits.iter().cloned().collect();
    ensure(got == want, || format!("rational Mordell hits {got:?}"))?;
    ensure(rep.counterexamples.is_empty(), || format!("{} field points with x^3 outside {{-1, 0, 8}}", rep.counterexamples.len()))?;
    Ok(format!("no cube progressions; {} field points on y^2 = x^3 + 1, rational ones as expected", rep.field_hits.len()))
}

fn rand_eint(rng: &mut ChaCha8Rng, bound: i64) -> EisensteinInt {
    EisensteinInt::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn rand_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> EisensteinInt {
    loop {
        let x = rand_eint(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

fn same_up_to(a: &Point, b: &Point, c: &KElement) -> bool {
    Unit::CUBE_ROOTS.iter().any(|z| {
        let f = &kv(&z.to_eint()) * c;
        a.0 == &b.0 * &f && a.1 == &b.1 * &f
    })
}

fn statuses_agree(v: &Verdict, w: &Verdict, map: impl Fn(&Point) -> Point, scale: &KElement) -> bool {
    if v.status.name() != w.status.name() || v.rule.name != w.rule.name || v.rule.tag != w.rule.tag || v.pattern != w.pattern {
        return false;
    }
    match (&v.status, &w.status) {
        (Status::HasSolutions(a), Status::HasSolutions(b)) => same_up_to(b, &map(a), scale),
        (Status::OnlyTrivial(a), Status::OnlyTrivial(b)) => {
            let got: BTreeSet<Point> = b.iter().cloned().collect();
            Unit::CUBE_ROOTS.iter().any(|z| {
                let f = &kv(&z.to_eint()) * scale;
                got == a.iter().map(|p| map(p)).map(|p| (&p.0 * &f, &p.1 * &f)).collect()
            })
        }
        _ => true,
    }
}

/// Number of random cases per randomized property.
pub const PROPERTY_CASES: usize = 1000;

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let nine = BigInt::from(9);
    for _ in 0..PROPERTY_CASES {
        let x = rand_eint(&mut rng, 1_000_000);
        let m = rand_nonzero(&mut rng, 1_000_000);
        let (q, r) = lib(x.divmod(&m))?;
        ensure(&(&q * &m) + &r == x && BigInt::from(3) * r.norm() <= m.norm(), || format!("division of {x} by {m}"))?;

        let y = rand_nonzero(&mut rng, 100_000);
        ensure(lib(factor(&y))?.reconstruct() == y, || format!("factorization of {y}"))?;

        let (a, b) = (rand_nonzero(&mut rng, 10_000), rand_nonzero(&mut rng, 10_000));
        ensure(lib((&a * &b).ord_beta())? == lib(a.ord_beta())? + lib(b.ord_beta())?, || format!("ord_beta({a} * {b})"))?;

        let (la, lb) = (BigInt::from(rng.gen_range(-10_000..=10_000)), BigInt::from(rng.gen_range(-10_000..=10_000)));
        let (lx, ly) = lucas_pair(la.clone(), lb.clone());
        let s = &la * &la + &la * &lb + &lb * &lb;
        ensure(&lx + &ly == &nine * &la * &lb * (&la + &lb), || format!("Lucas sum at ({la}, {lb})"))?;
        ensure(&lx * &lx - &lx * &ly + &ly * &ly == BigInt::from(3) * s.pow(3), || format!("Lucas norm at ({la}, {lb})"))?;

        let g = rand_nonzero(&mut rng, 1_000);
        if !(g.a() + g.b()).is_multiple_of(&BigInt::from(3)) {
            let c = g.cube();
            let ok = [EisensteinInt::one(), -EisensteinInt::one()]
                .iter()
                .any(|e| (c.a() - e.a()).is_multiple_of(&nine) && c.b().is_multiple_of(&nine));
            ensure(ok, || format!("{g}^3 is not +-1 mod 9"))?;
        }
    }

    let mut descents = 0;
    while descents < PROPERTY_CASES {
        let (r, s) = (rand_nonzero(&mut rng, 40), rand_nonzero(&mut rng, 40));
        let (a, b) = (r.cube(), s.cube());
        if a == b || (&a + &b).is_zero() {
            continue;
        }
        let c = -(&a + &b);
        let t = lib(Triple::new(a, b, c.clone(), -c.clone()))?;
        if let DescentOutcome::Step { from, to, .. } = lib(descent_step(&t))? {
            ensure(to.product() == -from.c.clone(), || format!("descent product for r={r}, s={s}"))?;
        }
        descents += 1;
    }

    let budget = SearchBudget { denom_bound: 6, coord_bound: 4, relation_bound: 4, lucas_bound: 10 };
    for _ in 0..200 {
        let m = kv(&rand_nonzero(&mut rng, 12));
        let c = kv(&rand_nonzero(&mut rng, 3));
        let v = run(&m, Scope::K, &budget)?;
        let cubed = run(&(&m * &c.cube()), Scope::K, &budget)?;
        let negated = run(&-&m, Scope::K, &budget)?;
        let conj = run(&m.conj(), Scope::K, &budget)?;
        ensure(statuses_agree(&v, &cubed, |p| p.clone(), &c), || format!("cube invariance at M={m}, c={c}"))?;
        ensure(statuses_agree(&v, &negated, |p| (-&p.0, -&p.1), &KElement::one()), || format!("sign invariance at M={m}"))?;
        ensure(statuses_agree(&v, &conj, |p| (p.0.conj(), p.1.conj()), &KElement::one()), || format!("conjugation invariance at M={m}"))?;
        ensure(conj.canonical == v.canonical.conj(), || format!("canonical form of conj({m})"))?;
    }

    let mut triples = 0;
    for a1 in -6i64..=6 {
        for a2 in -6i64..=6 {
            for b1 in -6i64..=6 {
                for b2 in -6i64..=6 {
                    let a = EisensteinInt::new(a1, a2);
                    let b = EisensteinInt::new(b1, b2);
                    let c = -(&a + &b);
                    if a.is_zero() || b.is_zero() || c.is_zero() {
                        continue;
                    }
                    let prod = &(&a * &b) * &c;
                    let is_cube = matches!(lib(unit_times_cube(&prod))?, Some((u, _)) if u == Unit::ONE);
                    if is_cube {
                        triples += 1;
                        ensure(cube_triple_structure(&a, &b, &c).is_ok(), || format!("({a}, {b}, {c}) lacks the (c, cw, cw^2) form"))?;
                    }
                }
            }
        }
    }
    ensure(triples > 0, || "no cube triples in the box".into())?;
    Ok(format!("{PROPERTY_CASES} cases per property, 200 classify grid points, {triples} cube triples in the box"))
}

fn evaluate(id: u8, level: Level, expected: &ExpectedTables) -> Check {
    match id {
        1 => criterion_1(),
        2 => criterion_2(level),
        3 => criterion_3(),
        4 => table_check(&[TableKind::ConditionI], expected),
        5 => table_check(&[TableKind::ExcA, TableKind::ExcB, TableKind::ExcAMod9First5], expected),
        6 => criterion_6(level),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(),
        _ => Err(format!("no criterion {id}")),
    }
}

/// Runs one criterion, turning panics into failures and enforcing its time limit.
pub fn run_criterion(id: u8, level: Level, expected: &ExpectedTables) -> CriterionResult {
    let (_, name, secs) = CRITERIA.iter().copied().find(|c| c.0 == id).unwrap_or((id, "unknown", 0));
    let limit = Duration::from_secs(secs);
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| evaluate(id, level, expected)))
        .unwrap_or_else(|e| Err(format!("panic: {}", e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())));
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; exceeded the {secs} s limit")),
        Err(e) => (false, e),
    };
    CriterionResult { id, name, passed, detail, elapsed, limit }
}

pub fn run_all(level: Level, expected: &ExpectedTables) -> Report {
    Report {
        level,
        results: CRITERIA.iter().map(|c| run_criterion(c.0, level, expected)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_fixture_names_criterion() {
        let mut e = ExpectedTables::default();
        e.exc_a_mod9_first5[4] = 571;
        let r = run_criterion(5, Level::Quick, &e);
        assert!(!r.passed);
        assert!(r.to_string().contains("criterion  5 FAIL"));
        assert!(r.detail.contains("excA-mod9-first5"));
        assert!(run_criterion(4, Level::Quick, &e).passed);
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(11, Level::Quick, &ExpectedTables::default()).passed);
    }
}
