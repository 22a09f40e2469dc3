//! Arithmetic predicates on split primes: condition (I), Exceptional A and
//! Exceptional B.
//!
//! Condition (I) and Exceptional A are each computed along two independent
//! paths. A disagreement can only mean an implementation bug, so it panics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::is_perfect_square;
use crate::eisenstein::{EisensteinInt, Unit};
use crate::error::{Error, Result};
use crate::factorization::{classify_rational_prime, is_cube_mod_p, residue_split, PrimeClass};

/// Coordinates `(a, b)` of `pi = a*u + b*v`.
pub fn uv_coordinates(pi: &EisensteinInt) -> (BigInt, BigInt) {
    pi.to_uv()
}

fn split_pi(p: &BigInt) -> Result<EisensteinInt> {
    match classify_rational_prime(p.clone())? {
        PrimeClass::Split { pi, .. } => Ok(pi),
        _ => Err(Error::NotSplit(p.clone())),
    }
}

/// Is `pi_bar` a cube in `(O / pi)^*`?
pub fn condition_i(p: impl Into<BigInt>) -> Result<bool> {
    let p = p.into();
    let pi = split_pi(&p)?;
    Ok(condition_i_for(&pi, &p))
}

fn condition_i_for(pi: &EisensteinInt, p: &BigInt) -> bool {
    let residue = residue_split(&pi.conj(), pi, p).expect("split prime");
    let direct = is_cube_mod_p(&residue, p).expect("pi and pi_bar are coprime");
    // pi + pi_bar = -(a + b) and pi_bar = pi + pi_bar mod pi; -1 is a cube
    let (a, b) = uv_coordinates(pi);
    let shortcut = is_cube_mod_p(&(a + b), p).expect("a + b is prime to p");
    assert_eq!(direct, shortcut, "condition (I) paths disagree for p = {p}");
    direct
}

/// Exceptional A, with a witness `(x, y)` of `4p = x^2 + 243 y^2` when true.
pub fn exceptional_a(p: impl Into<BigInt>) -> Result<(bool, Option<(BigInt, BigInt)>)> {
    let p = p.into();
    let pi = split_pi(&p)?;
    Ok(exceptional_a_for(&pi, &p))
}

fn exceptional_a_for(pi: &EisensteinInt, p: &BigInt) -> (bool, Option<(BigInt, BigInt)>) {
    let nine = BigInt::from(9);
    let by_associates = Unit::ALL
        .iter()
        .any(|u| pi.mul_unit(*u).b().is_multiple_of(&nine));
    // primary form: pi = a*u + b*v with pi = 1 mod 3 is an integer mod 9 iff 9 | a - b
    let (a, b) = uv_coordinates(pi);
    assert_eq!(
        by_associates,
        (a - b).is_multiple_of(&nine),
        "associate scan and primary test disagree for p = {p}"
    );
    let witness = norm_form_243(p);
    assert_eq!(
        by_associates,
        witness.is_some(),
        "Exceptional A paths disagree for p = {p}"
    );
    (by_associates, witness)
}

/// Smallest-`y` solution of `4p = x^2 + 243 y^2` with `x >= 0`.
pub fn norm_form_243(p: &BigInt) -> Option<(BigInt, BigInt)> {
    let four_p = p * 4u32;
    let mut y = BigInt::zero();
    loop {
        let rest = &four_p - BigInt::from(243) * &y * &y;
        if rest < BigInt::zero() {
            return None;
        }
        if let Some(x) = is_perfect_square(&rest) {
            return Some((x, y));
        }
        y += 1;
    }
}

/// Is 3 a cube modulo `p`?
pub fn exceptional_b(p: impl Into<BigInt>) -> Result<bool> {
    let p = p.into();
    split_pi(&p)?;
    is_cube_mod_p(&BigInt::from(3), &p)
}

/// Everything the criteria say about one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeReport {
    pub p: BigInt,
    pub residue9: u32,
    pub condition_i: Option<bool>,
    pub exceptional_a: Option<bool>,
    pub exceptional_a_witness: Option<(BigInt, BigInt)>,
    pub exceptional_b: Option<bool>,
    pub pi: Option<EisensteinInt>,
}

pub fn prime_report(p: impl Into<BigInt>) -> Result<PrimeReport> {
    let p = p.into();
    let residue9 = p.mod_floor(&BigInt::from(9)).to_u32().expect("small");
    let mut report = PrimeReport {
        p: p.clone(),
        residue9,
        condition_i: None,
        exceptional_a: None,
        exceptional_a_witness: None,
        exceptional_b: None,
        pi: None,
    };
    if let PrimeClass::Split { pi, .. } = classify_rational_prime(p.clone())? {
        let (exc_a, witness) = exceptional_a_for(&pi, &p);
        report.condition_i = Some(condition_i_for(&pi, &p));
        report.exceptional_a = Some(exc_a);
        report.exceptional_a_witness = witness;
        report.exceptional_b = Some(exceptional_b(p)?);
        report.pi = Some(pi);
    }
    Ok(report)
}

impl PrimeReport {
    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p.to_string().parse::<Value>().expect("integer literal"),
            "mod9": self.residue9,
            "conditionI": self.condition_i,
            "excA": self.exceptional_a,
            "excA_witness": self.exceptional_a_witness.as_ref().map(|(x, y)| {
                vec![x.to_string().parse::<Value>().expect("integer"), y.to_string().parse::<Value>().expect("integer")]
            }),
            "excB": self.exceptional_b,
            "pi": self.pi.as_ref().map(|x| x.to_string()),
        })
    }
}
