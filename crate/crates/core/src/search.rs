//! Bounded witness searches and exhaustive checks of small corollaries.
//!
//! Box scans run on checked `i128` coordinates and fall back to big integers
//! when a product might overflow. Scans may run in parallel; results are
//! always merged and sorted before they are returned.
//!
//! Witness order: common denominator ascending, then the numerators
//! `(x.a, x.b, y.a, y.b)` over that denominator in descending order.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, factor_int, icbrt_i128, is_perfect_square};
use crate::constructors::Point;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::kelement::KElement;

/// Limits for the witness searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest denominator tried.
    pub denom_bound: u32,
    /// Largest absolute numerator coordinate in Eisenstein box scans.
    pub coord_bound: u32,
    /// Largest absolute coordinate of `r`, `s`, `t` in relation search.
    pub relation_bound: u32,
    /// Largest `|A|`, `|B|` in Lucas triple search.
    pub lucas_bound: u32,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            denom_bound: 50,
            coord_bound: 30,
            relation_bound: 12,
            lucas_bound: 100,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.denom_bound == 0 {
            return Err(Error::InvalidBudget("denominator bound must be at least 1"));
        }
        if self.coord_bound == 0 {
            return Err(Error::InvalidBudget("coordinate bound must be at least 1"));
        }
        if self.relation_bound == 0 {
            return Err(Error::InvalidBudget("relation bound must be at least 1"));
        }
        if self.lucas_bound == 0 {
            return Err(Error::InvalidBudget("Lucas bound must be at least 1"));
        }
        Ok(())
    }
}

/// Sort key realising the witness order.
pub fn witness_key(p: &Point) -> (BigInt, Reverse<[BigInt; 4]>) {
    let l = p.0.den().lcm(p.1.den());
    let x = p.0.num().scale(&(&l / p.0.den()));
    let y = p.1.num().scale(&(&l / p.1.den()));
    (l, Reverse([x.a().clone(), x.b().clone(), y.a().clone(), y.b().clone()]))
}

pub fn sort_witnesses(points: &mut Vec<Point>) {
    points.sort_by_cached_key(witness_key);
    points.dedup();
}

/// All rational solutions with denominator at most `h`, by the divisor method.
///
/// For `x = a/d`, `y = b/d` put `N = M d^3` and `e = a + b`, a divisor of `N`
/// with the sign of `N` and `|e|^3 <= 4|N|`. Then `a` is a root of
/// `3a^2 - 3ea + e^2 - N/e = 0`.
pub fn search_rational(m: &BigInt, h: u32) -> Vec<Point> {
    if m.is_zero() {
        return Vec::new();
    }
    let fm = factor_int(m);
    let mut found: Vec<Point> = (1..=h)
        .into_par_iter()
        .flat_map_iter(|d| {
            let db = BigInt::from(d);
            let mut f = fm.clone();
            if d > 1 {
                for (p, e) in factor_int(&db) {
                    *f.entry(p).or_insert(0) += 3 * e;
                }
            }
            let n = m * db.pow(3);
            let sign = if n.is_negative() { -1 } else { 1 };
            let four_n = n.abs() * 4u32;
            let mut out = Vec::new();
            for e_abs in divisors(&f) {
                if e_abs.pow(3) > four_n {
                    break;
                }
                let e = &e_abs * sign;
                let q = &n / &e;
                let disc: BigInt = &q * 12 - &e * &e * 3;
                let Some(s) = is_perfect_square(&disc) else { continue };
                let e3: BigInt = &e * 3;
                for root in [&e3 + &s, &e3 - &s] {
                    if !root.is_multiple_of(&BigInt::from(6)) {
                        continue;
                    }
                    let a = root / 6;
                    let b = &e - &a;
                    let x = KElement::from_ratio(a, db.clone()).expect("non-zero denominator");
                    let y = KElement::from_ratio(b, db.clone()).expect("non-zero denominator");
                    out.push((x, y));
                }
            }
            out
        })
        .collect();
    let target = KElement::from_int(m.clone());
    for p in &found {
        assert_eq!(&(&p.0.cube() + &p.1.cube()), &target, "rational search emitted a non-solution");
    }
    sort_witnesses(&mut found);
    found
}

/// Coordinate ring for box scans: overflow-checked small pairs or big integers.
trait Coords: Clone + Eq + Hash + Send + Sync {
    fn pair(a: i64, b: i64) -> Self;
    fn from_eint(x: &EisensteinInt) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Self;
    fn to_eint(&self) -> EisensteinInt;

    fn cube(&self) -> Option<Self> {
        self.mul(self)?.mul(self)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.add(&rhs.neg())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Small(i128, i128);

const SMALL_LIMIT: i128 = 1 << 100;

fn guard(x: i128) -> Option<i128> {
    (x.abs() < SMALL_LIMIT).then_some(x)
}

impl Coords for Small {
    fn pair(a: i64, b: i64) -> Self {
        Small(a as i128, b as i128)
    }
    fn from_eint(x: &EisensteinInt) -> Option<Self> {
        Some(Small(guard(x.a().to_i128()?)?, guard(x.b().to_i128()?)?))
    }
    fn mul(&self, r: &Self) -> Option<Self> {
        let bb = self.1.checked_mul(r.1)?;
        let a = self.0.checked_mul(r.0)?.checked_sub(bb)?;
        let b = self.0.checked_mul(r.1)?.checked_add(r.0.checked_mul(self.1)?)?.checked_sub(bb)?;
        Some(Small(guard(a)?, guard(b)?))
    }
    fn add(&self, r: &Self) -> Option<Self> {
        Some(Small(guard(self.0 + r.0)?, guard(self.1 + r.1)?))
    }
    fn neg(&self) -> Self {
        Small(-self.0, -self.1)
    }
    fn to_eint(&self) -> EisensteinInt {
        EisensteinInt::new(self.0, self.1)
    }
}

impl Coords for EisensteinInt {
    fn pair(a: i64, b: i64) -> Self {
        EisensteinInt::new(a, b)
    }
    fn from_eint(x: &EisensteinInt) -> Option<Self> {
        Some(x.clone())
    }
    fn mul(&self, r: &Self) -> Option<Self> {
        Some(self * r)
    }
    fn add(&self, r: &Self) -> Option<Self> {
        Some(self + r)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_eint(&self) -> EisensteinInt {
        self.clone()
    }
}

fn box_points<C: Coords>(bound: u32) -> Vec<C> {
    let b = bound as i64;
    (-b..=b)
        .flat_map(|x| (-b..=b).map(move |y| C::pair(x, y)))
        .collect()
}

/// Cube -> all box points with that cube (`x`, `wx`, `w^2 x` collide).
fn cube_table<C: Coords>(bound: u32) -> Option<HashMap<C, Vec<C>>> {
    let mut table: HashMap<C, Vec<C>> = HashMap::new();
    for x in box_points::<C>(bound) {
        table.entry(x.cube()?).or_default().push(x);
    }
    Some(table)
}

fn eisenstein_scan<C: Coords>(m: &EisensteinInt, coord: u32, h: u32) -> Option<Vec<(u32, C, C)>> {
    let m = C::from_eint(m)?;
    let cubes = cube_table::<C>(coord)?;
    let xs = box_points::<C>(coord);
    let per_d: Option<Vec<Vec<(u32, C, C)>>> = (1..=h)
        .into_par_iter()
        .map(|d| {
            let d3 = C::pair(d as i64, 0).cube()?;
            let md3 = m.mul(&d3)?;
            let mut out = Vec::new();
            for x in &xs {
                let rest = md3.sub(&x.cube()?)?;
                for y in cubes.get(&rest).into_iter().flatten() {
                    out.push((d, x.clone(), y.clone()));
                }
            }
            Some(out)
        })
        .collect();
    Some(per_d?.into_iter().flatten().collect())
}

/// Points `(x/d, y/d)` with numerator coordinates in `[-coord, coord]` and
/// `1 <= d <= h`. Incomplete by design: no hit is not evidence of no solution.
pub fn search_eisenstein(m: &EisensteinInt, coord: u32, h: u32) -> Vec<Point> {
    if m.is_zero() {
        return Vec::new();
    }
    let raw: Vec<(u32, EisensteinInt, EisensteinInt)> = match eisenstein_scan::<Small>(m, coord, h) {
        Some(hits) => hits
            .into_iter()
            .map(|(d, x, y)| (d, x.to_eint(), y.to_eint()))
            .collect(),
        None => eisenstein_scan::<EisensteinInt>(m, coord, h).expect("big integers never overflow"),
    };
    let target = KElement::from_eint(m.clone());
    let mut found: Vec<Point> = raw
        .into_iter()
        .map(|(d, x, y)| {
            let p = (
                KElement::new(x, d).expect("positive denominator"),
                KElement::new(y, d).expect("positive denominator"),
            );
            assert_eq!(&(&p.0.cube() + &p.1.cube()), &target, "box scan emitted a non-solution");
            p
        })
        .collect();
    sort_witnesses(&mut found);
    found
}

type Relation = (EisensteinInt, EisensteinInt, EisensteinInt);

fn relation_key(rel: &Relation) -> (BigInt, BigInt, [BigInt; 6]) {
    let (r, s, t) = rel;
    let norm_sum = r.norm() + s.norm() + t.norm();
    let b_sum = r.b().abs() + s.b().abs() + t.b().abs();
    (
        norm_sum,
        b_sum,
        [r.a(), r.b(), s.a(), s.b(), t.a(), t.b()].map(|c| c.clone()),
    )
}

fn relation_scan<C: Coords>(m: &EisensteinInt, bound: u32) -> Option<Vec<(C, C, C)>> {
    let m = C::from_eint(m)?;
    let u = C::pair(0, 1);
    let v = C::pair(-1, -1);
    let cubes = cube_table::<C>(bound)?;
    let zero = C::pair(0, 0);
    let pts: Vec<C> = box_points::<C>(bound).into_iter().filter(|x| *x != zero).collect();
    let hits: Option<Vec<Vec<(C, C, C)>>> = pts
        .par_iter()
        .map(|r| {
            // s^3 = -(w^2 r^3 + w M t^3), from w r^3 + w^2 s^3 + M t^3 = 0
            let vr3 = v.mul(&r.cube()?)?;
            let um = u.mul(&m)?;
            let mut out = Vec::new();
            for t in &pts {
                let rest = vr3.add(&um.mul(&t.cube()?)?)?.neg();
                for s in cubes.get(&rest).into_iter().flatten() {
                    if *s != zero {
                        out.push((r.clone(), s.clone(), t.clone()));
                    }
                }
            }
            Some(out)
        })
        .collect();
    Some(hits?.into_iter().flatten().collect())
}

/// A relation `w r^3 + w^2 s^3 + M t^3 = 0` with `rst != 0` and coordinates
/// in `[-bound, bound]`. Among all hits the one minimising
/// `(N(r) + N(s) + N(t), sum of |w-coordinates|, r, s, t)` is returned.
pub fn relation_search(m: &EisensteinInt, bound: u32) -> Option<Relation> {
    if m.is_zero() {
        return None;
    }
    let hits: Vec<Relation> = match relation_scan::<Small>(m, bound) {
        Some(h) => h
            .into_iter()
            .map(|(r, s, t)| (r.to_eint(), s.to_eint(), t.to_eint()))
            .collect(),
        None => relation_scan::<EisensteinInt>(m, bound).expect("big integers never overflow"),
    };
    hits.into_iter().min_by_key(relation_key)
}

/// Non-zero `x, y, z` in the box with `x^3 + y^3 + z^3 = 0`, if any.
pub fn flt3_exhaust(bound: u32) -> Option<(EisensteinInt, EisensteinInt, EisensteinInt)> {
    let zero = Small(0, 0);
    let cubes = cube_table::<Small>(bound).expect("small box");
    let pts: Vec<(Small, Small)> = box_points::<Small>(bound)
        .into_iter()
        .filter(|x| *x != zero)
        .map(|x| (x.cube().expect("small"), x))
        .collect();
    pts.par_iter()
        .enumerate()
        .find_map_first(|(i, (x3, x))| {
            pts[i..].iter().find_map(|(y3, y)| {
                let z = cubes.get(&x3.add(y3).expect("small").neg())?.first()?;
                (*z != zero).then(|| (x.to_eint(), y.to_eint(), z.to_eint()))
            })
        })
}

/// Scanner sanity check: all `x^3 + y^3 = z^3` with `x, z` non-zero and `y`
/// unrestricted in the box. Every hit has `y = 0`.
pub fn flt3_sanity(bound: u32) -> Vec<(EisensteinInt, EisensteinInt, EisensteinInt)> {
    let cubes = cube_table::<Small>(bound).expect("small box");
    let zero = Small(0, 0);
    let pts = box_points::<Small>(bound);
    let mut hits = Vec::new();
    for x in pts.iter().filter(|x| **x != zero) {
        let x3 = x.cube().expect("small");
        for y in &pts {
            for z in cubes.get(&x3.add(&y.cube().expect("small")).expect("small")).into_iter().flatten() {
                if *z != zero {
                    hits.push((x.to_eint(), y.to_eint(), z.to_eint()));
                }
            }
        }
    }
    hits
}

/// Integers `x < z < y` (as cubes), all non-zero and `|.| <= bound`, with
/// `x^3 + y^3 = 2 z^3`.
pub fn cube_ap_exhaust(bound: u32) -> Option<(i64, i64, i64)> {
    let b = bound as i64;
    (-b..=b).into_par_iter().filter(|&x| x != 0).find_map_first(|x| {
        (x + 1..=b).filter(|&y| y != 0).find_map(|y| {
            let s = x.pow(3) + y.pow(3);
            if s % 2 != 0 {
                return None;
            }
            let z = icbrt_i128((s / 2) as i128)? as i64;
            (z != 0 && z != x && z != y).then_some((x, z, y))
        })
    })
}

/// The squares analogue: first `0 < x < z < y <= bound` with `x^2 + y^2 = 2 z^2`.
pub fn square_ap_first(bound: u32) -> Option<(u64, u64, u64)> {
    let b = bound as u64;
    for y in 1..=b {
        for x in 1..y {
            let s = x * x + y * y;
            if s % 2 == 0 {
                let z2 = s / 2;
                let z = z2.isqrt();
                if z * z == z2 && x < z && z < y {
                    return Some((x, z, y));
                }
            }
        }
    }
    None
}

/// Points of `y^2 = x^3 + 1` found by a bounded scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MordellReport {
    pub rational_hits: Vec<Point>,
    pub field_hits: Vec<Point>,
    /// Hits with `x^3` outside `{-1, 0, 8}`; always empty.
    pub counterexamples: Vec<Point>,
}

/// Scans `x = X / d^2`, `y = Y / d^3` with `1 <= d <= h` and the coordinates
/// of `X` in `[-coord, coord]`, solving `Y^2 = X^3 + d^6` exactly in `O`.
pub fn mordell_check(h: u32, coord: u32) -> MordellReport {
    let allowed: BTreeSet<KElement> = [-1, 0, 8].map(KElement::from_int).into_iter().collect();
    let mut hits: Vec<Point> = Vec::new();
    let b = coord as i64;
    for d in 1..=h {
        let d2 = BigInt::from(d).pow(2);
        let d3 = BigInt::from(d).pow(3);
        let d6 = EisensteinInt::from_int(&d3 * &d3);
        for xa in -b..=b {
            for xb in -b..=b {
                let x = EisensteinInt::new(xa, xb);
                if let Some(y) = (&x.cube() + &d6).sqrt() {
                    for y in [y.clone(), -y] {
                        let p = (
                            KElement::new(x.clone(), d2.clone()).expect("positive"),
                            KElement::new(y, d3.clone()).expect("positive"),
                        );
                        hits.push(p);
                    }
                }
            }
        }
    }
    sort_witnesses(&mut hits);
    let mut report = MordellReport::default();
    for p in hits {
        assert_eq!(p.1.pow(2), &p.0.cube() + &KElement::one(), "Mordell scan emitted a non-point");
        if !allowed.contains(&p.0.cube()) {
            report.counterexamples.push(p.clone());
        }
        if p.0.is_rational() && p.1.is_rational() {
            report.rational_hits.push(p.clone());
        }
        report.field_hits.push(p);
    }
    report
}

/// Naive double loop over numerators `|a|, |b| <= max_num` for denominators
/// up to `h`; an independent oracle for [`search_rational`].
pub fn naive_rational(m: &BigInt, h: u32, max_num: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for d in 1..=h as i64 {
        let md3 = m * BigInt::from(d).pow(3);
        for a in -max_num..=max_num {
            for b in -max_num..=max_num {
                if BigInt::from(a).pow(3) + BigInt::from(b).pow(3) == md3 {
                    out.push((
                        KElement::from_ratio(a, d).expect("d > 0"),
                        KElement::from_ratio(b, d).expect("d > 0"),
                    ));
                }
            }
        }
    }
    sort_witnesses(&mut out);
    out
}

/// Largest numerator a rational solution with denominator `d <= h` can have:
/// `a^2 - ab + b^2 >= (a+b)^2/4` and `|a+b| >= 1` give `|a|, |b| <= (4|M| h^3)^(1/2) + 1`.
pub fn naive_numerator_bound(m: &BigInt, h: u32) -> i64 {
    let n: BigInt = (m.abs() * BigInt::from(h).pow(3) * 4u32).sqrt() + 2;
    n.to_i64().expect("small oracle instance")
}
