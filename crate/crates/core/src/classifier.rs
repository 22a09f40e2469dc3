//! Cube-class canonicalization and theorem dispatch for `x^3 + y^3 = M`.
//!
//! Solvability only depends on `M` up to non-zero cubes of `K` (and so up to
//! sign). Every `M` is written as `M = rep * lambda^3` where `rep` is built
//! from the canonical form:
//!
//! - a unit `1`, `w` or `w^2`;
//! - each irreducible to its exponent mod 3, with `beta^1` realised as
//!   `9 = beta^4` and `beta^2` as `3 = -beta^2`, so rational `M` get
//!   rational representatives.
//!
//! Witnesses are found for `rep` and multiplied by `lambda`. Of `rep` and its
//! conjugate, the one with the smaller canonical key is searched, and the
//! witness is conjugated back when needed. This makes verdicts exactly
//! invariant under cubes, sign and conjugation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::constructors::{lucas_triple_search, lucas_witness, solution_from_relation, Point};
use crate::criteria::{condition_i, exceptional_a, exceptional_b};
use crate::eisenstein::{EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::factorization::{cube_root, factor};
use crate::kelement::KElement;
use crate::search::{relation_search, search_eisenstein, search_rational, sort_witnesses, SearchBudget};

/// Field in which solutions are sought.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    Q,
    K,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Q => "Q",
            Scope::K => "K",
        })
    }
}

impl std::str::FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" | "q" => Ok(Scope::Q),
            "K" | "k" => Ok(Scope::K),
            _ => Err(Error::parse(s, "scope must be Q or K")),
        }
    }
}

/// `M` modulo cubes and sign: a unit in `{1, w, w^2}` and distinguished
/// irreducibles with exponents 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalM {
    pub unit: Unit,
    pub factors: Vec<(EisensteinInt, u32)>,
}

impl CanonicalM {
    /// The integral representative `rep` of the cube class.
    pub fn representative(&self) -> EisensteinInt {
        self.factors.iter().fold(self.unit.to_eint(), |acc, (p, e)| {
            let f = if *p == EisensteinInt::beta() {
                EisensteinInt::from_int(if *e == 1 { 9 } else { 3 })
            } else {
                p.pow(*e)
            };
            &acc * &f
        })
    }

    /// Canonical form of the conjugate class.
    pub fn conj(&self) -> CanonicalM {
        let mut factors: Vec<(EisensteinInt, u32)> = self
            .factors
            .iter()
            .map(|(p, e)| (p.conj().canonical_associate().expect("non-zero").1, *e))
            .collect();
        sort_factors(&mut factors);
        CanonicalM {
            unit: self.unit.conj(),
            factors,
        }
    }

    fn key(&self) -> (u8, Vec<(BigInt, bool, BigInt, BigInt, u32)>) {
        (
            self.unit.power(),
            self.factors
                .iter()
                .map(|(p, e)| (p.norm(), p.b().is_negative(), p.a().clone(), p.b().clone(), *e))
                .collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "unit": self.unit.to_string(),
            "factors": self.factors.iter().map(|(p, e)| json!([p.to_string(), e])).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for CanonicalM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, e) in &self.factors {
            write!(f, " * ({p})^{e}")?;
        }
        Ok(())
    }
}

fn sort_factors(factors: &mut [(EisensteinInt, u32)]) {
    factors.sort_by(|(p, _), (q, _)| (p.norm(), p.a(), p.b()).cmp(&(q.norm(), q.a(), q.b())));
}

struct Reduction {
    canonical: CanonicalM,
    rep: EisensteinInt,
    lambda: KElement,
}

fn integral_multiple(m: &KElement) -> EisensteinInt {
    // M * den^3 lies in O and has the same cube class
    m.num().scale(&m.den().pow(2))
}

fn reduce(m: &KElement) -> Result<Reduction> {
    if m.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let f = factor(&integral_multiple(m))?;
    let factors: Vec<(EisensteinInt, u32)> = f
        .factors
        .iter()
        .filter(|(_, e)| e % 3 != 0)
        .map(|(p, e)| (p.clone(), e % 3))
        .collect();
    let canonical = CanonicalM {
        unit: f.unit.unsigned(),
        factors,
    };
    let rep = canonical.representative();
    let quotient = m.div_eint(&rep)?;
    let root = cube_root(&integral_multiple(&quotient)).expect("M / rep is a cube");
    let lambda = KElement::new(root, quotient.den().clone())?;
    debug_assert_eq!(&lambda.cube().scale_eint(&rep), m);
    Ok(Reduction { canonical, rep, lambda })
}

/// Cube-class canonical form of a non-zero `M`.
pub fn canonicalize(m: &KElement) -> Result<CanonicalM> {
    Ok(reduce(m)?.canonical)
}

/// Theorem numbering used in verdict citations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremTag {
    T1_3,
    T1_4,
    T1_5Cor2,
    T1_6,
    T1_7,
    T2_1,
    T2_2,
    T2_3,
    T2_4,
}

impl TheoremTag {
    pub fn code(self) -> &'static str {
        match self {
            TheoremTag::T1_3 => "1.3",
            TheoremTag::T1_4 => "1.4",
            TheoremTag::T1_5Cor2 => "1.5-cor2",
            TheoremTag::T1_6 => "1.6",
            TheoremTag::T1_7 => "1.7",
            TheoremTag::T2_1 => "2.1",
            TheoremTag::T2_2 => "2.2",
            TheoremTag::T2_3 => "2.3",
            TheoremTag::T2_4 => "2.4",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremTag::T1_5Cor2 => f.write_str("Theorem 1.5, Corollary 2"),
            other => write!(f, "Theorem {}", other.code()),
        }
    }
}

/// Shapes of canonical forms, in dispatch order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// No irreducibles, unit 1: `M` is a cube.
    TrivialCube,
    /// No irreducibles, unit `w` or `w^2`.
    UnitTwist,
    /// One inert `p = 2, 5 mod 9`, any exponent and unit.
    InertPrime,
    /// One split irreducible of norm `4, 7 mod 9`, any unit.
    SplitPrimePower47,
    /// `beta^1`, unit 1 (the class of 9).
    BetaNine,
    /// `beta^1` with unit `w`, `w^2`, or `beta^2` with any unit.
    BetaOther,
    /// `beta^1 p^e`, inert `p = 2, 5 mod 9`, unit 1.
    BetaInert,
    /// `pi^e pi_bar^e`, `p = 4, 7 mod 9`.
    RationalSplit47,
    /// `beta^2 pi^e pi_bar^e`, unit 1 (the class of `3p` or `3p^2`).
    ThreeP,
    /// One split irreducible of norm `1 mod 9`, unit 1.
    PrimaryOneMod9,
    /// One split irreducible of norm `1 mod 9`, unit `w` or `w^2`.
    TwistedOneMod9,
    /// One inert `p = 8 mod 9` to the first power, unit 1.
    InertEightMod9,
    /// Anything else.
    Unmatched,
}

impl Pattern {
    pub const ALL: [Pattern; 13] = [
        Pattern::TrivialCube,
        Pattern::UnitTwist,
        Pattern::InertPrime,
        Pattern::SplitPrimePower47,
        Pattern::BetaNine,
        Pattern::BetaOther,
        Pattern::BetaInert,
        Pattern::RationalSplit47,
        Pattern::ThreeP,
        Pattern::PrimaryOneMod9,
        Pattern::TwistedOneMod9,
        Pattern::InertEightMod9,
        Pattern::Unmatched,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::TrivialCube => "trivial-cube",
            Pattern::UnitTwist => "unit-twist",
            Pattern::InertPrime => "inert-prime",
            Pattern::SplitPrimePower47 => "split-prime-4-7-mod-9",
            Pattern::BetaNine => "beta-nine",
            Pattern::BetaOther => "beta-other",
            Pattern::BetaInert => "beta-inert",
            Pattern::RationalSplit47 => "rational-split-4-7-mod-9",
            Pattern::ThreeP => "three-p",
            Pattern::PrimaryOneMod9 => "primary-1-mod-9",
            Pattern::TwistedOneMod9 => "twisted-1-mod-9",
            Pattern::InertEightMod9 => "inert-8-mod-9",
            Pattern::Unmatched => "unmatched",
        }
    }

    /// Does the canonical form have this shape? The predicates are mutually
    /// exclusive and `Unmatched` is the complement of the others.
    pub fn matches(self, c: &CanonicalM) -> bool {
        let one = c.unit == Unit::ONE;
        let kinds: Vec<(Kind, u32)> = c.factors.iter().map(|(p, e)| (kind(p), *e)).collect();
        match self {
            Pattern::TrivialCube => kinds.is_empty() && one,
            Pattern::UnitTwist => kinds.is_empty() && !one,
            Pattern::InertPrime => matches!(kinds.as_slice(), [(Kind::Inert(p), _)] if mod9(p, &[2, 5])),
            Pattern::SplitPrimePower47 => matches!(kinds.as_slice(), [(Kind::Split(p), _)] if mod9(p, &[4, 7])),
            Pattern::BetaNine => matches!(kinds.as_slice(), [(Kind::Beta, 1)]) && one,
            Pattern::BetaOther => matches!(kinds.as_slice(), [(Kind::Beta, e)] if *e == 2 || !one),
            Pattern::BetaInert => {
                one && matches!(kinds.as_slice(), [(Kind::Beta, 1), (Kind::Inert(p), _)] if mod9(p, &[2, 5]))
            }
            Pattern::RationalSplit47 => {
                matches!(kinds.as_slice(), [(Kind::Split(p), e), (Kind::Split(q), f)] if p == q && e == f && mod9(p, &[4, 7]))
            }
            Pattern::ThreeP => {
                one && matches!(kinds.as_slice(), [(Kind::Beta, 2), (Kind::Split(p), e), (Kind::Split(q), f)] if p == q && e == f)
            }
            Pattern::PrimaryOneMod9 => one && matches!(kinds.as_slice(), [(Kind::Split(p), _)] if mod9(p, &[1])),
            Pattern::TwistedOneMod9 => !one && matches!(kinds.as_slice(), [(Kind::Split(p), _)] if mod9(p, &[1])),
            Pattern::InertEightMod9 => one && matches!(kinds.as_slice(), [(Kind::Inert(p), 1)] if mod9(p, &[8])),
            Pattern::Unmatched => Pattern::ALL[..12].iter().all(|q| !q.matches(c)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Beta,
    Inert(BigInt),
    Split(BigInt),
}

fn kind(p: &EisensteinInt) -> Kind {
    if *p == EisensteinInt::beta() {
        Kind::Beta
    } else if p.is_rational() {
        Kind::Inert(p.a().clone())
    } else {
        Kind::Split(p.norm())
    }
}

fn mod9(p: &BigInt, residues: &[u32]) -> bool {
    let r = p.mod_floor(&BigInt::from(9)).to_u32().expect("small");
    residues.contains(&r)
}

/// All patterns that match; exactly one for every canonical form.
pub fn matching_patterns(c: &CanonicalM) -> Vec<Pattern> {
    Pattern::ALL.into_iter().filter(|p| p.matches(c)).collect()
}

/// Outcome of classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    NoSolutions,
    /// Every solution, all of them trivial.
    OnlyTrivial(Vec<Point>),
    HasSolutions(Point),
    /// Existence is established in the literature; no witness is constructed.
    LiteratureSolvable(String),
    Unknown,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::NoSolutions => "NoSolutions",
            Status::OnlyTrivial(_) => "OnlyTrivial",
            Status::HasSolutions(_) => "HasSolutions",
            Status::LiteratureSolvable(_) => "LiteratureSolvable",
            Status::Unknown => "Unknown",
        }
    }
}

/// Which rule produced a status, and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub name: String,
    pub tag: Option<TheoremTag>,
    pub reason: String,
}

impl Rule {
    fn theorem(tag: TheoremTag, reason: impl Into<String>) -> Rule {
        Rule {
            name: tag.to_string(),
            tag: Some(tag),
            reason: reason.into(),
        }
    }

    fn named(name: &str, reason: impl Into<String>) -> Rule {
        Rule {
            name: name.to_string(),
            tag: None,
            reason: reason.into(),
        }
    }
}

/// Classifier output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub input: KElement,
    pub scope: Scope,
    pub canonical: CanonicalM,
    pub pattern: Pattern,
    pub status: Status,
    pub rule: Rule,
}

impl Verdict {
    pub fn witness(&self) -> Option<&Point> {
        match &self.status {
            Status::HasSolutions(p) => Some(p),
            _ => None,
        }
    }

    /// 0 for a definite answer, 2 for `Unknown`.
    pub fn exit_code(&self) -> i32 {
        if self.status == Status::Unknown {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "input": self.input.to_string(),
            "scope": self.scope.to_string(),
            "canonical": self.canonical.to_json(),
            "pattern": self.pattern.name(),
            "status": self.status.name(),
            "rule": self.rule.name,
            "theorem": self.rule.tag.map(|t| t.code()),
            "reason": self.rule.reason,
        });
        match &self.status {
            Status::HasSolutions((x, y)) => v["witness"] = json!([x.to_string(), y.to_string()]),
            Status::OnlyTrivial(sols) => {
                v["solutions"] = sols
                    .iter()
                    .map(|(x, y)| json!([x.to_string(), y.to_string()]))
                    .collect::<Vec<_>>()
                    .into()
            }
            Status::LiteratureSolvable(c) => v["citation"] = json!(c),
            _ => {}
        }
        v
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.status.name(), self.rule.name, self.rule.reason)?;
        match &self.status {
            Status::HasSolutions((x, y)) => write!(f, "; witness x = {x}, y = {y}"),
            Status::OnlyTrivial(sols) => {
                let list: Vec<String> = sols.iter().map(|(x, y)| format!("({x}, {y})")).collect();
                write!(f, "; solutions {}", list.join(", "))
            }
            Status::LiteratureSolvable(c) => write!(f, "; {c}"),
            _ => Ok(()),
        }
    }
}

fn scale_point(p: &Point, k: &KElement) -> Point {
    (&p.0 * k, &p.1 * k)
}

fn conj_point(p: &Point) -> Point {
    (p.0.conj(), p.1.conj())
}

fn on_curve(p: &Point, m: &KElement) -> bool {
    &(&p.0.cube() + &p.1.cube()) == m
}

fn trivial_solutions(rep: &EisensteinInt, scope: Scope) -> Vec<Point> {
    let roots: Vec<KElement> = match scope {
        Scope::Q => vec![KElement::one()],
        Scope::K => Unit::CUBE_ROOTS.iter().map(|u| KElement::from_eint(u.to_eint())).collect(),
    };
    let mut out = Vec::new();
    if rep.is_one() {
        for z in &roots {
            out.push((z.clone(), KElement::zero()));
            out.push((KElement::zero(), z.clone()));
        }
    } else {
        for a in &roots {
            for b in &roots {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strategy {
    Default,
    LucasFirst,
    RelationFirst,
}

/// Searches for a witness of `target` (`rep` or its conjugate).
fn find_witness(target: &EisensteinInt, strategy: Strategy, budget: &SearchBudget) -> Option<(Point, Rule)> {
    if target.is_rational() {
        let m = target.a();
        let lucas = || {
            let (a, b) = lucas_triple_search(m, budget.lucas_bound)?;
            let w = lucas_witness(a.clone(), b.clone(), m).ok()?;
            Some((w, Rule::named("Lucas-construction", format!("Lucas triple A = {a}, B = {b}, C = {}", -(&a + &b)))))
        };
        let rational = || {
            let hits = search_rational(m, budget.denom_bound);
            let w = hits.into_iter().next()?;
            Some((w, Rule::named("rational-search", format!("divisor search with denominators up to {}", budget.denom_bound))))
        };
        return if strategy == Strategy::LucasFirst {
            lucas().or_else(rational)
        } else {
            rational().or_else(lucas)
        };
    }
    let relation = || {
        let (r, s, t) = relation_search(target, budget.relation_bound)?;
        let w = solution_from_relation(&r, &s, &t, target).ok()?;
        Some((w, Rule::named("relation-search", format!("relation w*r^3 + w^2*s^3 + M*t^3 = 0 with (r, s, t) = ({r}, {s}, {t})"))))
    };
    let boxed = || {
        let hits = search_eisenstein(target, budget.coord_bound, budget.denom_bound);
        let w = hits.into_iter().next()?;
        Some((w, Rule::named("eisenstein-search", format!("box search with coordinates up to {} and denominators up to {}", budget.coord_bound, budget.denom_bound))))
    };
    if strategy == Strategy::RelationFirst {
        relation().or_else(boxed)
    } else {
        boxed().or_else(relation)
    }
}

fn split_prime_of(c: &CanonicalM) -> BigInt {
    c.factors
        .iter()
        .find(|(p, _)| !p.is_rational() && *p != EisensteinInt::beta())
        .map(|(p, _)| p.norm())
        .expect("pattern has a split irreducible")
}

fn inert_prime_of(c: &CanonicalM) -> BigInt {
    c.factors
        .iter()
        .find(|(p, _)| p.is_rational())
        .map(|(p, _)| p.a().clone())
        .expect("pattern has an inert prime")
}

enum Decision {
    Final(Status, Rule),
    Search(Strategy, String),
}

fn decide(c: &CanonicalM, pattern: Pattern, rep: &EisensteinInt, scope: Scope) -> Result<Decision> {
    use Decision::*;
    Ok(match pattern {
        Pattern::TrivialCube => Final(
            Status::OnlyTrivial(trivial_solutions(rep, scope)),
            Rule::theorem(TheoremTag::T1_5Cor2, "M is a cube; every solution has xy = 0"),
        ),
        Pattern::UnitTwist => Final(
            Status::NoSolutions,
            Rule::theorem(TheoremTag::T1_6, format!("M is {} times a cube", c.unit)),
        ),
        Pattern::InertPrime => {
            let p = inert_prime_of(c);
            let e = c.factors[0].1;
            if p == BigInt::from(2) && e == 1 && c.unit == Unit::ONE {
                Final(
                    Status::OnlyTrivial(trivial_solutions(rep, scope)),
                    Rule::theorem(TheoremTag::T1_3, "M is 2 times a cube; only the solutions with x^3 = y^3 = 1"),
                )
            } else {
                Final(
                    Status::NoSolutions,
                    Rule::theorem(TheoremTag::T1_3, format!("p={p} = {} mod 9, exponent {e}", p.mod_floor(&BigInt::from(9)))),
                )
            }
        }
        Pattern::SplitPrimePower47 => {
            let p = split_prime_of(c);
            Final(
                Status::NoSolutions,
                Rule::theorem(TheoremTag::T1_4, format!("irreducible of norm p={p} = {} mod 9", p.mod_floor(&BigInt::from(9)))),
            )
        }
        Pattern::BetaNine => Final(
            Status::HasSolutions((KElement::from_int(2), KElement::from_int(1))),
            Rule::named("constant-witness", "M is 9 times a cube and 9 = 2^3 + 1^3"),
        ),
        Pattern::BetaOther => Final(
            Status::NoSolutions,
            Rule::theorem(TheoremTag::T1_7, "M is an associate of beta or beta^2 other than beta, times a cube"),
        ),
        Pattern::BetaInert => {
            let p = inert_prime_of(c);
            Final(
                Status::NoSolutions,
                Rule::theorem(TheoremTag::T2_1, format!("M is beta times p={p} (or p^2) times a cube, p = {} mod 9", p.mod_floor(&BigInt::from(9)))),
            )
        }
        Pattern::RationalSplit47 => {
            let p = split_prime_of(c);
            if c.unit == Unit::ONE {
                Final(
                    Status::LiteratureSolvable(format!(
                        "p={p} = {} mod 9: Sylvester's conjecture for such primes is established in the literature",
                        p.mod_floor(&BigInt::from(9))
                    )),
                    Rule::named("literature", format!("p={p} or p^2 times a cube")),
                )
            } else if condition_i(p.clone())? {
                Final(
                    Status::NoSolutions,
                    Rule::theorem(TheoremTag::T2_2, format!("M is {} times p={p} (or p^2) times a cube; condition (I) holds", c.unit)),
                )
            } else {
                Search(Strategy::Default, format!("condition (I) fails for p={p}"))
            }
        }
        Pattern::ThreeP => {
            let p = split_prime_of(c);
            let ci = condition_i(p.clone())?;
            let (ea, _) = exceptional_a(p.clone())?;
            let eb = exceptional_b(p.clone())?;
            if ci && !ea && !eb {
                Final(
                    Status::NoSolutions,
                    Rule::theorem(TheoremTag::T2_3, format!("p={p}: condition (I) holds and p is neither Exceptional A nor Exceptional B")),
                )
            } else {
                Search(
                    Strategy::LucasFirst,
                    format!("p={p}: condition (I) {ci}, Exceptional A {ea}, Exceptional B {eb}"),
                )
            }
        }
        Pattern::PrimaryOneMod9 => {
            let p = split_prime_of(c);
            let (ea, _) = exceptional_a(p.clone())?;
            if ea {
                Search(Strategy::RelationFirst, format!("primary irreducible of norm p={p} = 1 mod 9, p is Exceptional A"))
            } else {
                Final(
                    Status::NoSolutions,
                    Rule::theorem(TheoremTag::T2_4, format!("primary irreducible of norm p={p} = 1 mod 9, p is not Exceptional A")),
                )
            }
        }
        Pattern::TwistedOneMod9 => {
            let p = split_prime_of(c);
            Search(Strategy::RelationFirst, format!("{} times an irreducible of norm p={p} = 1 mod 9", c.unit))
        }
        Pattern::InertEightMod9 => {
            let p = inert_prime_of(c);
            Final(
                Status::LiteratureSolvable(format!("p={p} = 8 mod 9: such primes are sums of two rational cubes in infinitely many ways")),
                Rule::named("literature", format!("p={p} times a cube")),
            )
        }
        Pattern::Unmatched => Search(Strategy::Default, "no theorem applies".to_string()),
    })
}

/// Classifies `x^3 + y^3 = M` over `scope`.
pub fn classify(m: &KElement, scope: Scope, budget: &SearchBudget) -> Result<Verdict> {
    budget.validate()?;
    if m.is_zero() {
        return Err(Error::ZeroTarget);
    }
    if scope == Scope::Q && !m.is_rational() {
        return Err(Error::NonRationalTarget(m.to_string()));
    }
    let Reduction { canonical, rep, lambda } = reduce(m)?;
    let patterns = matching_patterns(&canonical);
    assert_eq!(patterns.len(), 1, "rule table must be exclusive: {patterns:?}");
    let pattern = patterns[0];
    let (status, rule) = match decide(&canonical, pattern, &rep, scope)? {
        Decision::Final(status, rule) => (status, rule),
        Decision::Search(strategy, why) => {
            let conj = canonical.conj();
            let flip = conj.key() < canonical.key();
            let target = if flip { rep.conj() } else { rep.clone() };
            match find_witness(&target, strategy, budget) {
                Some((w, mut rule)) => {
                    let w = if flip { conj_point(&w) } else { w };
                    rule.reason = format!("{why}; {}", rule.reason);
                    (Status::HasSolutions(w), rule)
                }
                None => (Status::Unknown, Rule::named("search-exhausted", format!("{why}; no witness within the search budget"))),
            }
        }
    };
    let status = match status {
        Status::HasSolutions(w) => {
            let w = scale_point(&w, &lambda);
            assert!(on_curve(&w, m), "witness does not satisfy x^3 + y^3 = M");
            assert!(scope == Scope::K || (w.0.is_rational() && w.1.is_rational()));
            Status::HasSolutions(w)
        }
        Status::OnlyTrivial(sols) => {
            let mut sols: Vec<Point> = sols.iter().map(|p| scale_point(p, &lambda)).collect();
            assert!(sols.iter().all(|p| on_curve(p, m)));
            sort_witnesses(&mut sols);
            Status::OnlyTrivial(sols)
        }
        other => other,
    };
    Ok(Verdict {
        input: m.clone(),
        scope,
        canonical,
        pattern,
        status,
        rule,
    })
}

/// [`classify`] for an element of `O`.
pub fn classify_eint(m: &EisensteinInt, scope: Scope, budget: &SearchBudget) -> Result<Verdict> {
    classify(&KElement::from_eint(m.clone()), scope, budget)
}
