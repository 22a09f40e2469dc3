//! Rational primes in `O`, unique factorization, and residue-field helpers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{factor_int, inv_mod, is_perfect_square, is_prime};
use crate::eisenstein::{EisensteinInt, Unit};
use crate::error::{Error, Result};

/// How a rational prime behaves in `O`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeClass {
    /// `p = 3 = -beta^2`.
    Ramified,
    /// `p = 2 mod 3`; `p` stays irreducible.
    Inert,
    /// `p = 1 mod 3`; `p = pi * pi_bar` with `pi` primary and not associate to `pi_bar`.
    Split { pi: EisensteinInt, pi_bar: EisensteinInt },
}

/// Decides the splitting type of the prime `p`.
///
/// For split primes `pi` is the primary factor whose `w`-coordinate is
/// positive; `pi_bar` is its conjugate (also primary).
pub fn classify_rational_prime(p: impl Into<BigInt>) -> Result<PrimeClass> {
    let p = p.into();
    if !is_prime(&p) {
        return Err(Error::NotPrime(p));
    }
    let three = BigInt::from(3);
    if p == three {
        return Ok(PrimeClass::Ramified);
    }
    if p.mod_floor(&three) == BigInt::from(2) {
        return Ok(PrimeClass::Inert);
    }
    let pi = split_prime(&p);
    let pi_bar = pi.conj();
    Ok(PrimeClass::Split { pi, pi_bar })
}

/// Primary `pi` with `N(pi) = p` and positive `w`-coordinate, for `p = 1 mod 3`.
///
/// A primitive cube root of unity `c` mod `p` maps `w -> c`, so `pi` is the
/// distinguished gcd of `p` and `w - c`.
pub fn split_prime(p: &BigInt) -> EisensteinInt {
    let e = (p - 1u32) / 3u32;
    let mut g = BigInt::from(2);
    let c = loop {
        let c = g.modpow(&e, p);
        if !c.is_one() {
            break c;
        }
        g += 1;
    };
    let target = EisensteinInt::new(-c, 1);
    let (pi, _, _) = EisensteinInt::from_int(p.clone())
        .gcd_ext(&target)
        .expect("non-zero arguments");
    debug_assert_eq!(&pi.norm(), p);
    if pi.b().is_positive() {
        pi
    } else {
        pi.conj()
    }
}

/// Split-prime search by enumeration: smallest `b >= 1` with
/// `a^2 - ab + b^2 = p` solvable, then normalised as in [`split_prime`].
pub fn split_prime_by_enumeration(p: &BigInt) -> Option<EisensteinInt> {
    let four_p = p * 4u32;
    let mut b = BigInt::one();
    while BigInt::from(3) * &b * &b <= four_p {
        // (2a - b)^2 = 4p - 3b^2
        if let Some(s) = is_perfect_square(&(&four_p - BigInt::from(3) * &b * &b)) {
            if (&s + &b).is_even() {
                let a = (&s + &b) / 2;
                let (_, x) = EisensteinInt::new(a, b.clone()).canonical_associate().ok()?;
                return Some(if x.b().is_positive() { x } else { x.conj() });
            }
        }
        b += 1;
    }
    None
}

/// `unit * prod(irr_i ^ e_i)` with distinguished irreducibles sorted by
/// `(norm, a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Unit,
    pub factors: Vec<(EisensteinInt, u32)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> EisensteinInt {
        self.factors
            .iter()
            .fold(self.unit.to_eint(), |acc, (p, e)| &acc * &p.pow(*e))
    }

    pub fn exponent_of(&self, irr: &EisensteinInt) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == irr)
            .map_or(0, |(_, e)| *e)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "unit": self.unit.to_string(),
            "factors": self
                .factors
                .iter()
                .map(|(p, e)| json!({"irr": p.to_string(), "exp": e}))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, e) in &self.factors {
            if p.a().is_zero() || p.b().is_zero() {
                write!(f, " * {p}^{e}")?;
            } else {
                write!(f, " * ({p})^{e}")?;
            }
        }
        Ok(())
    }
}

fn strip(x: &mut EisensteinInt, irr: &EisensteinInt) -> u32 {
    let mut e = 0;
    while let Some(q) = x.div_exact(irr) {
        *x = q;
        e += 1;
    }
    e
}

/// Unique factorization of a non-zero element.
pub fn factor(x: &EisensteinInt) -> Result<Factorization> {
    if x.is_zero() {
        return Err(Error::ZeroArgument("factorization"));
    }
    let mut rest = x.clone();
    let mut factors = Vec::new();
    for (p, _) in factor_int(&x.norm()) {
        match classify_rational_prime(p.clone())? {
            PrimeClass::Ramified => {
                let beta = EisensteinInt::beta();
                let e = strip(&mut rest, &beta);
                factors.push((beta, e));
            }
            PrimeClass::Inert => {
                let irr = EisensteinInt::from_int(p);
                let e = strip(&mut rest, &irr);
                factors.push((irr, e));
            }
            PrimeClass::Split { pi, pi_bar } => {
                for irr in [pi, pi_bar] {
                    let e = strip(&mut rest, &irr);
                    if e > 0 {
                        factors.push((irr, e));
                    }
                }
            }
        }
    }
    let unit = Unit::from_eint(&rest).expect("cofactor is a unit");
    factors.sort_by(|(p, _), (q, _)| (p.norm(), p.a(), p.b()).cmp(&(q.norm(), q.a(), q.b())));
    Ok(Factorization { unit, factors })
}

/// Writes `x = i * r^3` with `i` in `{1, w, w^2}` when every exponent of `x`
/// is divisible by 3.
pub fn unit_times_cube(x: &EisensteinInt) -> Result<Option<(Unit, EisensteinInt)>> {
    let f = factor(x)?;
    if f.factors.iter().any(|(_, e)| e % 3 != 0) {
        return Ok(None);
    }
    let r = f
        .factors
        .iter()
        .fold(EisensteinInt::one(), |acc, (p, e)| &acc * &p.pow(e / 3));
    // -1 = (-1)^3 is absorbed into the root
    let r = if f.unit.is_negative() { -r } else { r };
    Ok(Some((f.unit.unsigned(), r)))
}

/// Exact cube root in `O`, if one exists.
pub fn cube_root(x: &EisensteinInt) -> Option<EisensteinInt> {
    if x.is_zero() {
        return Some(EisensteinInt::zero());
    }
    match unit_times_cube(x).ok()? {
        Some((u, r)) if u == Unit::ONE => Some(r),
        _ => None,
    }
}

fn check_split(p: &BigInt) -> Result<()> {
    if p.mod_floor(&BigInt::from(3)) != BigInt::one() {
        return Err(Error::NotSplit(p.clone()));
    }
    Ok(())
}

/// Image of `x` in `O / pi = Z / p`, where `N(pi) = p` is a split prime.
pub fn residue_split(x: &EisensteinInt, pi: &EisensteinInt, p: &BigInt) -> Result<BigInt> {
    check_split(p)?;
    assert_eq!(&pi.norm(), p, "residue_split needs N(pi) = p");
    assert!(!pi.b().is_multiple_of(p), "split prime with w-coordinate divisible by p");
    let c = omega_image(pi, p);
    Ok((x.a() + x.b() * c).mod_floor(p))
}

/// The residue `c` of `w` modulo `pi = a + b*w`, i.e. `c = -a / b mod p`.
pub fn omega_image(pi: &EisensteinInt, p: &BigInt) -> BigInt {
    (-pi.a() * inv_mod(pi.b(), p)).mod_floor(p)
}

/// True when `x` is a non-zero cube modulo the prime `p = 1 mod 3`.
pub fn is_cube_mod_p(x: &BigInt, p: &BigInt) -> Result<bool> {
    check_split(p)?;
    let r = x.mod_floor(p);
    if r.is_zero() {
        return Err(Error::ZeroResidue);
    }
    Ok(r.modpow(&((p - 1u32) / 3u32), p).is_one())
}

/// The field `O / p` for an inert prime `p`, with `p^2` elements.
#[derive(Clone, Copy, Debug)]
pub struct InertField {
    p: u64,
}

/// Element `a + b*w` of [`InertField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InertResidue {
    pub a: u64,
    pub b: u64,
}

impl InertField {
    pub fn new(p: u64) -> Result<Self> {
        let pb = BigInt::from(p);
        if !is_prime(&pb) {
            return Err(Error::NotPrime(pb));
        }
        if p % 3 != 2 {
            return Err(Error::NotInert(pb));
        }
        Ok(InertField { p })
    }

    pub fn reduce(&self, x: &EisensteinInt) -> InertResidue {
        let p = BigInt::from(self.p);
        InertResidue {
            a: x.a().mod_floor(&p).to_u64().expect("reduced"),
            b: x.b().mod_floor(&p).to_u64().expect("reduced"),
        }
    }

    pub fn one(&self) -> InertResidue {
        InertResidue { a: 1 % self.p, b: 0 }
    }

    pub fn add(&self, x: InertResidue, y: InertResidue) -> InertResidue {
        InertResidue {
            a: (x.a + y.a) % self.p,
            b: (x.b + y.b) % self.p,
        }
    }

    pub fn mul(&self, x: InertResidue, y: InertResidue) -> InertResidue {
        let p = self.p as u128;
        let (a1, b1, a2, b2) = (x.a as u128, x.b as u128, y.a as u128, y.b as u128);
        let bb = b1 * b2 % p;
        InertResidue {
            a: ((a1 * a2 + p - bb) % p) as u64,
            b: ((a1 * b2 + a2 * b1 + p - bb) % p) as u64,
        }
    }

    pub fn pow(&self, mut x: InertResidue, mut e: u64) -> InertResidue {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    /// Non-zero residues.
    pub fn units(&self) -> impl Iterator<Item = InertResidue> + '_ {
        (0..self.p)
            .flat_map(move |a| (0..self.p).map(move |b| InertResidue { a, b }))
            .filter(|x| x.a != 0 || x.b != 0)
    }

    /// Multiplicative order of a non-zero residue.
    pub fn order(&self, x: InertResidue) -> u64 {
        let n = self.p * self.p - 1;
        let mut best = n;
        let mut d = 1;
        while d * d <= n {
            if n % d == 0 {
                for k in [d, n / d] {
                    if k < best && self.pow(x, k) == self.one() {
                        best = k;
                    }
                }
            }
            d += 1;
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn prime_classes() {
        assert_eq!(classify_rational_prime(5).unwrap(), PrimeClass::Inert);
        assert_eq!(classify_rational_prime(3).unwrap(), PrimeClass::Ramified);
        assert_eq!(
            classify_rational_prime(7).unwrap(),
            PrimeClass::Split { pi: e(1, 3), pi_bar: e(-2, -3) }
        );
        assert_eq!(classify_rational_prime(9), Err(Error::NotPrime(BigInt::from(9))));
    }

    #[test]
    fn gcd_split_matches_enumeration() {
        for p in crate::arith::primes_below(3000).into_iter().filter(|p| p % 3 == 1) {
            let p = BigInt::from(p);
            let pi = split_prime(&p);
            assert_eq!(Some(pi.clone()), split_prime_by_enumeration(&p));
            assert!(pi.is_primary());
            assert_eq!(&pi * &pi.conj(), EisensteinInt::from_int(p.clone()));
            assert!(!pi.divides(&pi.conj()));
        }
    }

    #[test]
    fn factor_eighteen_omega() {
        let x = e(0, 18);
        let f = factor(&x).unwrap();
        assert_eq!(f.factors, vec![(EisensteinInt::beta(), 4), (e(2, 0), 1)]);
        assert_eq!(f.reconstruct(), x);
    }

    #[test]
    fn factor_units_and_seven() {
        let f = factor(&e(0, -1)).unwrap();
        assert_eq!(f.unit, Unit::NEG_OMEGA);
        assert!(f.factors.is_empty());
        let f = factor(&e(7, 0)).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.unit, Unit::ONE);
        let (p, q) = (&f.factors[0].0, &f.factors[1].0);
        assert_eq!(p.norm(), BigInt::from(7));
        assert!(!p.divides(q));
        assert_eq!(factor(&e(0, 0)), Err(Error::ZeroArgument("factorization")));
    }

    #[test]
    fn factorization_text_and_json() {
        let f = factor(&e(0, 18)).unwrap();
        assert_eq!(f.to_string(), "w * (1+2*w)^4 * 2^1");
        assert_eq!(f.to_json()["factors"][0]["exp"], 4);
    }

    #[test]
    fn residues_mod_seven() {
        let p = BigInt::from(7);
        let pi = e(1, 3);
        let c = residue_split(&e(0, 1), &pi, &p).unwrap();
        assert_eq!(c, BigInt::from(2));
        assert!((&c * &c + &c + 1u32).is_multiple_of(&p));
        assert!(residue_split(&pi, &pi, &p).unwrap().is_zero());
        assert!(residue_split(&e(1, 0), &pi, &p).unwrap().is_one());
    }

    #[test]
    fn cubes_mod_p() {
        assert!(is_cube_mod_p(&BigInt::from(3), &BigInt::from(61)).unwrap());
        assert!(!is_cube_mod_p(&BigInt::from(3), &BigInt::from(79)).unwrap());
        assert!(is_cube_mod_p(&BigInt::from(8), &BigInt::from(13)).unwrap());
        assert_eq!(is_cube_mod_p(&BigInt::from(13), &BigInt::from(13)), Err(Error::ZeroResidue));
        assert!(matches!(is_cube_mod_p(&BigInt::from(2), &BigInt::from(5)), Err(Error::NotSplit(_))));
    }

    #[test]
    fn inert_fields_have_no_element_of_order_nine() {
        let f2 = InertField::new(2).unwrap();
        assert!(f2.units().all(|x| 3 % f2.order(x) == 0));
        for p in [2u64, 5, 11] {
            let f = InertField::new(p).unwrap();
            let w = f.reduce(&EisensteinInt::omega());
            assert_eq!(f.pow(w, p * p - 1), f.one());
        }
        let f5 = InertField::new(5).unwrap();
        assert_eq!(f5.units().count(), 24);
        assert!(f5.units().all(|x| f5.order(x) % 9 != 0));
        assert!(InertField::new(7).is_err());
    }

    #[test]
    fn cube_roots() {
        let r = e(3, 2);
        assert_eq!(cube_root(&r.cube()).unwrap().cube(), r.cube());
        assert_eq!(cube_root(&e(0, 1)), None);
        let (i, s) = unit_times_cube(&r.cube().mul_omega()).unwrap().unwrap();
        assert_eq!(i, Unit::OMEGA);
        assert_eq!(s.cube(), r.cube());
    }
}
