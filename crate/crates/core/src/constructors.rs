//! Explicit witnesses for `x^3 + y^3 = M` and the executable 3-descent.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{icbrt_i128, perfect_cube_root};
use crate::eisenstein::{EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::factorization::{factor, unit_times_cube};
use crate::kelement::KElement;

pub type Point = (KElement, KElement);

fn on_curve(p: &Point, m: &KElement) -> bool {
    &(&p.0.cube() + &p.1.cube()) == m
}

fn ensure_on_curve(p: &Point, m: &KElement) -> Result<()> {
    if on_curve(p, m) {
        Ok(())
    } else {
        Err(Error::NotOnCurve(m.to_string()))
    }
}

/// Turns a relation `w*r^3 + w^2*s^3 + M*t^3 = 0` into a point on `x^3 + y^3 = M`.
///
/// Solving `w*x + w^2*y = w*r^3`, `w^2*x + w*y = w^2*s^3` gives
/// `x + y = M t^3` and `x^3 + y^3 = M (rst)^3`.
pub fn solution_from_relation(
    r: &EisensteinInt,
    s: &EisensteinInt,
    t: &EisensteinInt,
    m: &EisensteinInt,
) -> Result<Point> {
    let (u, v) = (EisensteinInt::omega(), EisensteinInt::omega_sq());
    let (r3, s3) = (r.cube(), s.cube());
    let rst = r * &(s * t);
    if rst.is_zero() || !(&(&u * &r3) + &(&v * &s3) + m * &t.cube()).is_zero() {
        return Err(Error::InvalidRelation);
    }
    let det = &v - &u;
    let x = KElement::from_eint(&v * &r3 - &u * &s3).div_eint(&det)?;
    let y = KElement::from_eint(&s3 - &r3).div_eint(&det)?;
    let point = (x.div_eint(&rst)?, y.div_eint(&rst)?);
    assert!(on_curve(&point, &KElement::from_eint(m.clone())), "relation solution off the curve");
    Ok(point)
}

/// The Lucas pair `x = A^3 - B^3 + 6A^2B + 3AB^2`, `y = B^3 - A^3 + 3A^2B + 6AB^2`.
pub fn lucas_pair(a: impl Into<BigInt>, b: impl Into<BigInt>) -> (BigInt, BigInt) {
    let (a, b) = (a.into(), b.into());
    let (a2, b2) = (&a * &a, &b * &b);
    let (a3, b3) = (&a2 * &a, &b2 * &b);
    let x = &a3 - &b3 + &a2 * &b * 6 + &a * &b2 * 3;
    let y = &b3 - &a3 + &a2 * &b * 3 + &a * &b2 * 6;
    let q = &a2 + &a * &b + &b2;
    assert_eq!(&x + &y, &a * &b * (&a + &b) * 9);
    assert_eq!(&x * &x - &x * &y + &y * &y, q.pow(3) * 3);
    (x, y)
}

/// Rational witness for integer `M` from a Lucas triple `(A, B, -A-B)` whose
/// product is `M` times a rational cube.
pub fn lucas_witness(a: impl Into<BigInt>, b: impl Into<BigInt>, m: &BigInt) -> Result<Point> {
    let (a, b) = (a.into(), b.into());
    let c = -(&a + &b);
    let prod = &a * &b * &c;
    if prod.is_zero() || m.is_zero() {
        return Err(Error::TripleMismatch);
    }
    // ABC/M = (K/M)^3 with K^3 = ABC * M^2
    let k = perfect_cube_root(&(&prod * m * m)).ok_or(Error::TripleMismatch)?;
    let (x, y) = lucas_pair(a.clone(), b.clone());
    let q = &a * &a + &a * &b + &b * &b;
    // x^3 + y^3 = -27 ABC Q^3 = M (-3 Q K / M)^3
    let den = -(q * BigInt::from(3) * k);
    let point = (KElement::from_ratio(x * m, den.clone())?, KElement::from_ratio(y * m, den)?);
    assert!(on_curve(&point, &KElement::from_int(m.clone())), "Lucas witness off the curve");
    Ok(point)
}

fn product_over_m_is_cube(a: i64, b: i64, m: &BigInt, m2_small: Option<i128>) -> bool {
    let c = -(a + b);
    let prod = a as i128 * b as i128 * c as i128;
    if let Some(n) = m2_small.and_then(|m2| prod.checked_mul(m2)) {
        if n.unsigned_abs() < 1u128 << 126 {
            return icbrt_i128(n).is_some();
        }
    }
    perfect_cube_root(&(BigInt::from(prod) * m * m)).is_some()
}

/// First `(A, B)` with `|A|, |B| <= bound`, `A, B, A + B` non-zero and
/// `AB(-A-B)/M` a rational cube.
///
/// Candidates are ordered by `|A| + |B|`, then `|A|`, then positive `A`
/// before negative, then positive `B` before negative.
pub fn lucas_triple_search(m: &BigInt, bound: u32) -> Option<(BigInt, BigInt)> {
    if m.is_zero() {
        return None;
    }
    let m2_small = i128::try_from(m * m).ok();
    let bound = bound as i64;
    for total in 2..=2 * bound {
        for abs_a in 1.max(total - bound)..=bound.min(total - 1) {
            let abs_b = total - abs_a;
            for (a, b) in [(abs_a, abs_b), (abs_a, -abs_b), (-abs_a, abs_b), (-abs_a, -abs_b)] {
                if a + b != 0 && product_over_m_is_cube(a, b, m, m2_small) {
                    return Some((BigInt::from(a), BigInt::from(b)));
                }
            }
        }
    }
    None
}

/// Doubling on `x^3 + y^3 = M`.
pub fn tangent_step(m: &KElement, p: &Point) -> Result<Point> {
    ensure_on_curve(p, m)?;
    let (x3, y3) = (p.0.cube(), p.1.cube());
    let d = &x3 - &y3;
    if d.is_zero() {
        return Err(Error::TangentDegenerate);
    }
    let two = KElement::from_int(2);
    let nx = &p.0 * &(&x3 + &(&two * &y3));
    let ny = -(&p.1 * &(&(&two * &x3) + &y3));
    let q = (nx.checked_div(&d)?, ny.checked_div(&d)?);
    assert!(on_curve(&q, m), "tangent point off the curve");
    Ok(q)
}

/// Third intersection of the line through two distinct points with the curve.
pub fn secant_step(m: &KElement, p: &Point, q: &Point) -> Result<Point> {
    ensure_on_curve(p, m)?;
    ensure_on_curve(q, m)?;
    if p == q {
        return Err(Error::SecantDegenerate("coincident points"));
    }
    let dx = &q.0 - &p.0;
    if dx.is_zero() {
        return Err(Error::SecantDegenerate("vertical line"));
    }
    let slope = (&q.1 - &p.1).checked_div(&dx)?;
    let icept = &p.1 - &(&slope * &p.0);
    // (1 + m^3) x^3 + 3 m^2 c x^2 + ... : the three roots sum to -3 m^2 c / (1 + m^3)
    let lead = &KElement::one() + &slope.cube();
    if lead.is_zero() {
        return Err(Error::SecantDegenerate("line parallel to the asymptote"));
    }
    let three = KElement::from_int(3);
    let sum = -(&three * &(&(&slope * &slope) * &icept)).checked_div(&lead)?;
    let x3 = &(&sum - &p.0) - &q.0;
    let y3 = &(&slope * &x3) + &icept;
    let r = (x3, y3);
    assert!(on_curve(&r, m), "secant point off the curve");
    Ok(r)
}

/// Descent state: `A + B + C = 0` with `ABC / M` a non-zero cube of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub a: EisensteinInt,
    pub b: EisensteinInt,
    pub c: EisensteinInt,
    pub target: EisensteinInt,
}

fn is_cube_up_to_sign(x: &EisensteinInt) -> Result<bool> {
    Ok(matches!(unit_times_cube(x)?, Some((u, _)) if u == Unit::ONE))
}

impl Triple {
    pub fn new(a: EisensteinInt, b: EisensteinInt, c: EisensteinInt, target: EisensteinInt) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() || target.is_zero() {
            return Err(Error::InvalidTriple("zero entry".into()));
        }
        if !(&(&a + &b) + &c).is_zero() {
            return Err(Error::InvalidTriple("entries do not sum to zero".into()));
        }
        // ABC / M is a cube of K iff ABC * M^2 is a cube of O
        let prod = &(&a * &b) * &c;
        if !is_cube_up_to_sign(&(&prod * &(&target * &target)))? {
            return Err(Error::InvalidTriple("ABC / M is not a cube".into()));
        }
        Ok(Triple { a, b, c, target })
    }

    pub fn entries(&self) -> [&EisensteinInt; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn product(&self) -> EisensteinInt {
        &(&self.a * &self.b) * &self.c
    }

    pub fn norm_product(&self) -> BigInt {
        self.product().norm()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "A": self.a.to_string(),
            "B": self.b.to_string(),
            "C": self.c.to_string(),
            "normA": self.a.norm().to_string(),
            "normB": self.b.norm().to_string(),
            "normC": self.c.norm().to_string(),
            "normABC": self.norm_product().to_string(),
        })
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Clears denominators of `x^3`, `y^3`, `-M` with `D` the cube of the common
/// denominator, so that `ABC = (-xyD')^3 M`.
pub fn triple_from_solution(x: &KElement, y: &KElement, m: &EisensteinInt) -> Result<Triple> {
    let mk = KElement::from_eint(m.clone());
    ensure_on_curve(&(x.clone(), y.clone()), &mk)?;
    if x.is_zero() || y.is_zero() {
        return Err(Error::DegenerateSolution("x or y is zero"));
    }
    let (x3, y3) = (x.cube(), y.cube());
    if x3 == y3 {
        return Err(Error::DegenerateSolution("x^3 = y^3"));
    }
    let d = x.den().lcm(y.den()).pow(3);
    let lift = |k: &KElement| k.scale_eint(&EisensteinInt::from_int(d.clone())).to_eint().expect("denominator cleared");
    Triple::new(lift(&x3), lift(&y3), -m.scale(&d), m.clone())
}

/// Divides out the common factor so the entries become pairwise coprime.
pub fn reduce_triple(t: &Triple) -> Result<Triple> {
    let (g, _, _) = t.a.gcd_ext(&t.b)?;
    if g.is_one() {
        return Ok(t.clone());
    }
    let q = |x: &EisensteinInt| x.div_exact(&g).expect("gcd divides every entry");
    Triple::new(q(&t.a), q(&t.b), q(&t.c), t.target.clone())
}

/// Writes a triple with zero sum and cube product as `(c, c*w, c*w^2)` up to
/// order. Returns `c` (the entry whose unit part is `+-1`) and the exponents
/// `k_i` with `entry_i = c * w^{k_i}`.
pub fn cube_triple_structure(
    a: &EisensteinInt,
    b: &EisensteinInt,
    c: &EisensteinInt,
) -> Result<(EisensteinInt, [u8; 3])> {
    let entries = [a, b, c];
    if entries.iter().any(|x| x.is_zero()) || !(&(a + b) + c).is_zero() {
        return Err(Error::NotCubeTriple);
    }
    if !is_cube_up_to_sign(&(&(a * b) * c))? {
        return Err(Error::NotCubeTriple);
    }
    for base in entries {
        if base.canonical_associate()?.0.unsigned() != Unit::ONE {
            continue;
        }
        let mut ks = [0u8; 3];
        let ok = entries.iter().enumerate().all(|(i, x)| {
            match (0..3u8).find(|&k| **x == base.mul_unit(Unit::CUBE_ROOTS[k as usize])) {
                Some(k) => {
                    ks[i] = k;
                    true
                }
                None => false,
            }
        });
        let mut sorted = ks;
        sorted.sort_unstable();
        if ok && sorted == [0, 1, 2] {
            return Ok((base.clone(), ks));
        }
    }
    Err(Error::NotCubeTriple)
}

/// Outcome of one descent step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentOutcome {
    /// `A` and `B` are units; no smaller triple exists.
    Terminal(Triple),
    Step {
        from: Triple,
        to: Triple,
        r: EisensteinInt,
        s: EisensteinInt,
        divisor: EisensteinInt,
    },
}

fn describe_unit(u: Option<(Unit, EisensteinInt)>) -> String {
    match u {
        None => "not a unit times a cube".to_string(),
        Some((i, _)) => format!("{i} times a cube"),
    }
}

/// One step `(A, B, C) -> (wr + w^2 s, w^2 r + ws, r + s)` where `A = i r^3`,
/// `B = i s^3` share the unit `i`, after dividing the triple by `i`.
///
/// The entry playing `C` is tried in the order third, second, first. The
/// multiplier of `s` is the first of `1, w, w^2` that makes `r + s`
/// divisible by the first irreducible of `C` with exponent not divisible by 3.
pub fn descent_step(t: &Triple) -> Result<DescentOutcome> {
    let e = t.entries();
    let mut obstructions = Vec::new();
    for (ia, ib, ic) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        if (e[ia] * e[ib]).norm().is_one() {
            let t2 = Triple::new(e[ia].clone(), e[ib].clone(), e[ic].clone(), t.target.clone())?;
            return Ok(DescentOutcome::Terminal(t2));
        }
        let sa = unit_times_cube(e[ia])?;
        let sb = unit_times_cube(e[ib])?;
        let ((i, r), (j, s)) = match (sa.clone(), sb.clone()) {
            (Some(x), Some(y)) if x.0 == y.0 => (x, y),
            _ => {
                obstructions.push(format!(
                    "C at position {}: A is {}, B is {}",
                    ic + 1,
                    describe_unit(sa),
                    describe_unit(sb)
                ));
                continue;
            }
        };
        debug_assert_eq!(i, j);
        let inv = i.inverse();
        let a = e[ia].mul_unit(inv);
        let b = e[ib].mul_unit(inv);
        let c = e[ic].mul_unit(inv);
        let from = Triple::new(a.clone(), b.clone(), c.clone(), t.target.clone())?;
        debug_assert_eq!(r.cube(), a);
        debug_assert_eq!(s.cube(), b);
        let fc = factor(&c)?;
        let Some(m) = fc
            .factors
            .iter()
            .find(|(_, k)| k % 3 != 0)
            .or(fc.factors.first())
            .map(|(p, _)| p.clone())
        else {
            obstructions.push(format!("C at position {}: C is a unit", ic + 1));
            continue;
        };
        let s = s
            .twists()
            .into_iter()
            .find(|s2| m.divides(&(&r + s2)))
            .expect("an irreducible factor of r^3 + s^3 divides r + s, r + ws or r + w^2 s");
        let (u, v) = (EisensteinInt::omega(), EisensteinInt::omega_sq());
        let a2 = &(&u * &r) + &(&v * &s);
        let b2 = &(&v * &r) + &(&u * &s);
        let c2 = &r + &s;
        let to = Triple::new(a2, b2, c2, t.target.clone())?;
        assert_eq!(to.product(), -c.clone(), "descent product identity");
        assert_eq!(to.norm_product(), c.norm());
        assert!(to.norm_product() < from.norm_product());
        return Ok(DescentOutcome::Step { from, to, r, s, divisor: m });
    }
    Err(Error::NotDescentForm(obstructions.join("; ")))
}

/// The beta-variant step for `r = 1`, `s = -1 mod 3`: all three new entries
/// are divisible by beta and their product is `-(r^3 + s^3) / beta^3`.
pub fn beta_descent_step(r: &EisensteinInt, s: &EisensteinInt) -> Result<[EisensteinInt; 3]> {
    let minus_s = -s;
    if !r.is_primary() || !minus_s.is_primary() {
        return Err(Error::NotDescentForm("need r = 1 and s = -1 mod 3".into()));
    }
    let (u, v, beta) = (EisensteinInt::omega(), EisensteinInt::omega_sq(), EisensteinInt::beta());
    let q = |x: EisensteinInt| x.div_exact(&beta).expect("beta divides each entry");
    let out = [
        q(&(&u * r) + &(&v * s)),
        q(&(&v * r) + &(&u * s)),
        q(r + s),
    ];
    let c = -(&r.cube() + &s.cube());
    debug_assert_eq!(&(&(&out[0] * &out[1]) * &out[2]) * &beta.cube(), -c);
    Ok(out)
}

/// Why a descent trace stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEnd {
    UnitsCase,
    StructureAbsent(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentTrace {
    pub triples: Vec<Triple>,
    pub end: TraceEnd,
}

impl DescentTrace {
    pub fn to_json_lines(&self) -> Vec<String> {
        self.triples
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let mut v = t.to_json();
                v["step"] = json!(k);
                v.to_string()
            })
            .collect()
    }
}

/// Runs the descent from a non-trivial solution until it reaches the units
/// case or a triple without the required cube structure.
pub fn descent_trace(x: &KElement, y: &KElement, m: &EisensteinInt, max_steps: usize) -> Result<DescentTrace> {
    let mut current = reduce_triple(&triple_from_solution(x, y, m)?)?;
    let mut triples = vec![current.clone()];
    for _ in 0..max_steps {
        match descent_step(&current) {
            Ok(DescentOutcome::Terminal(t)) => {
                *triples.last_mut().expect("non-empty") = t;
                return Ok(DescentTrace { triples, end: TraceEnd::UnitsCase });
            }
            Ok(DescentOutcome::Step { to, .. }) => {
                let next = reduce_triple(&to)?;
                assert!(next.norm_product() < current.norm_product());
                triples.push(next.clone());
                current = next;
            }
            Err(Error::NotDescentForm(why)) => {
                return Ok(DescentTrace { triples, end: TraceEnd::StructureAbsent(why) });
            }
            Err(other) => return Err(other),
        }
    }
    Err(Error::StepsExhausted(max_steps))
}

/// `true` when the point is one of the trivial ones with `xy = 0` or `x^3 = y^3`.
pub fn is_trivial_point(p: &Point) -> bool {
    p.0.is_zero() || p.1.is_zero() || p.0.cube() == p.1.cube()
}

/// Integer `M` as an element of `O`, for the rational entry points.
pub fn rational_target(m: &BigInt) -> EisensteinInt {
    EisensteinInt::from_int(m.clone())
}
