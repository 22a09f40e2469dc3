//! Exact arithmetic in the Eisenstein integers `Z[w]`, `w^2 + w + 1 = 0`.
//!
//! Elements are stored in the basis `{1, w}`. The other primitive cube root
//! of unity is `w^2 = -1 - w`; the ramified prime is `beta = 1 + 2w` with
//! `beta^2 = -3`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `a + b*w` of the ring of Eisenstein integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct EisensteinInt {
    a: BigInt,
    b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        EisensteinInt {
            a: a.into(),
            b: b.into(),
        }
    }

    /// Converts `a*u + b*v` (with `u = w`, `v = w^2`) into the `{1, w}` basis.
    pub fn from_uv(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        let a = a.into();
        let b = b.into();
        EisensteinInt::new(-b.clone(), a - b)
    }

    /// Coordinates `(a, b)` with `self = a*u + b*v`.
    pub fn to_uv(&self) -> (BigInt, BigInt) {
        (&self.b - &self.a, -self.a.clone())
    }

    pub fn zero() -> Self {
        EisensteinInt::default()
    }

    pub fn one() -> Self {
        EisensteinInt::new(1, 0)
    }

    /// The primitive cube root of unity `w` (written `u` in the `{u, v}` basis).
    pub fn omega() -> Self {
        EisensteinInt::new(0, 1)
    }

    /// `w^2 = -1 - w`.
    pub fn omega_sq() -> Self {
        EisensteinInt::new(-1, -1)
    }

    /// `beta = w - w^2 = 1 + 2w`.
    pub fn beta() -> Self {
        EisensteinInt::new(1, 2)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        EisensteinInt::new(n, 0)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the element lies in `Z`.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Complex conjugation, which swaps `w` and `w^2`: `a + b*w -> (a - b) - b*w`.
    pub fn conj(&self) -> Self {
        EisensteinInt::new(&self.a - &self.b, -self.b.clone())
    }

    /// `N(a + b*w) = a^2 - ab + b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = EisensteinInt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn cube(&self) -> Self {
        self * &(self * self)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        EisensteinInt::new(&self.a * k, &self.b * k)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &EisensteinInt) -> Option<EisensteinInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let p = self * &d.conj();
        let (qa, ra) = p.a.div_rem(&n);
        let (qb, rb) = p.b.div_rem(&n);
        if ra.is_zero() && rb.is_zero() {
            Some(EisensteinInt::new(qa, qb))
        } else {
            None
        }
    }

    pub fn divides(&self, x: &EisensteinInt) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.div_exact(self).is_some()
    }

    /// Division with remainder: `l = q*m + r` with `3*N(r) <= N(m)`.
    ///
    /// The rational quotient `l*conj(m)/N(m)` is rounded coordinatewise (ties
    /// away from zero) and the 3x3 neighbourhood of that lattice point is
    /// scanned for the remainder of least norm; ties go to the
    /// lexicographically smallest `(q.a, q.b)`.
    pub fn divmod(&self, m: &EisensteinInt) -> Result<(EisensteinInt, EisensteinInt)> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = m.norm();
        let p = self * &m.conj();
        let qa = round_half_away(&p.a, &n);
        let qb = round_half_away(&p.b, &n);
        let mut best: Option<(BigInt, EisensteinInt, EisensteinInt)> = None;
        for da in -1i32..=1 {
            for db in -1i32..=1 {
                let q = EisensteinInt::new(&qa + da, &qb + db);
                let r = self - &(&q * m);
                let nr = r.norm();
                let better = match &best {
                    None => true,
                    Some((bn, bq, _)) => {
                        nr < *bn || (nr == *bn && (&q.a, &q.b) < (&bq.a, &bq.b))
                    }
                };
                if better {
                    best = Some((nr, q, r));
                }
            }
        }
        let (nr, q, r) = best.expect("neighbourhood is non-empty");
        debug_assert!(BigInt::from(3) * nr <= n);
        Ok((q, r))
    }

    /// Extended Euclid: returns `(g, x, y)` with `g = x*self + y*other`, `g`
    /// the distinguished associate of a greatest common divisor.
    pub fn gcd_ext(&self, other: &EisensteinInt) -> Result<(EisensteinInt, EisensteinInt, EisensteinInt)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (EisensteinInt::one(), EisensteinInt::zero());
        let (mut old_t, mut t) = (EisensteinInt::zero(), EisensteinInt::one());
        while !r.is_zero() {
            let (q, rem) = old_r.divmod(&r)?;
            old_r = std::mem::replace(&mut r, rem);
            let ns = &old_s - &(&q * &s);
            old_s = std::mem::replace(&mut s, ns);
            let nt = &old_t - &(&q * &t);
            old_t = std::mem::replace(&mut t, nt);
        }
        let (unit, g) = old_r.canonical_associate()?;
        let inv = unit.inverse().to_eint();
        Ok((g, &old_s * &inv, &old_t * &inv))
    }

    /// Largest `n` with `beta^n | self`.
    pub fn ord_beta(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::OrdOfZero);
        }
        Ok(self.split_beta().0)
    }

    /// Writes `self = beta^k * c` with `c` prime to beta. `self` must be non-zero.
    pub(crate) fn split_beta(&self) -> (u32, EisensteinInt) {
        let beta = EisensteinInt::beta();
        let mut k = 0;
        let mut c = self.clone();
        // beta | a + b*w  iff  3 | a + b
        while (&c.a + &c.b).is_multiple_of(&BigInt::from(3)) {
            c = c.div_exact(&beta).expect("beta divides");
            k += 1;
        }
        (k, c)
    }

    /// True when `self = 1 (mod 3)`.
    pub fn is_primary(&self) -> bool {
        let three = BigInt::from(3);
        (&self.a - 1i32).is_multiple_of(&three) && self.b.is_multiple_of(&three)
    }

    /// Splits `self` as `unit * x0` with `x0` the distinguished associate:
    /// `beta^k` times the positive rational associate of the beta-free part
    /// when one exists, otherwise the associate congruent to 1 mod 3.
    pub fn canonical_associate(&self) -> Result<(Unit, EisensteinInt)> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("distinguished associate"));
        }
        let (k, c) = self.split_beta();
        let c0 = distinguished_beta_free(&c);
        let x0 = &EisensteinInt::beta().pow(k) * &c0;
        let unit = self
            .div_exact(&x0)
            .and_then(|z| Unit::from_eint(&z))
            .expect("associates differ by a unit");
        Ok((unit, x0))
    }

    /// Representative of `self mod 9` with both coordinates in `[0, 9)`.
    pub fn mod9_class(&self) -> EisensteinInt {
        let nine = BigInt::from(9);
        EisensteinInt::new(self.a.mod_floor(&nine), self.b.mod_floor(&nine))
    }

    /// The three products `self`, `w*self`, `w^2*self`.
    pub fn twists(&self) -> [EisensteinInt; 3] {
        let u = self.mul_omega();
        let v = u.mul_omega();
        [self.clone(), u, v]
    }

    /// `w * (a + b*w) = -b + (a - b)*w`.
    pub fn mul_omega(&self) -> EisensteinInt {
        EisensteinInt::new(-self.b.clone(), &self.a - &self.b)
    }

    pub fn mul_unit(&self, unit: Unit) -> EisensteinInt {
        let mut x = self.clone();
        for _ in 0..unit.power {
            x = x.mul_omega();
        }
        if unit.negative {
            -x
        } else {
            x
        }
    }

    /// Exact square root in the ring, if one exists.
    pub fn sqrt(&self) -> Option<EisensteinInt> {
        if self.is_zero() {
            return Some(EisensteinInt::zero());
        }
        // z = p + q*w; with X = 2p - q, Y = q: X^2 + 3Y^2 = 4N(z) and X*Y = b,
        // so X^2 is a root of t^2 - 4n*t + 3b^2 whose discriminant is (2(2a - b))^2.
        let norm = self.norm();
        let n = norm.sqrt();
        if &n * &n != norm {
            return None;
        }
        let two = BigInt::from(2);
        let d = &self.a * &two - &self.b;
        for t in [&n * &two + &d, &n * &two - &d] {
            if t.is_negative() {
                continue;
            }
            let x = t.sqrt();
            if &x * &x != t {
                continue;
            }
            let ys: Vec<BigInt> = if x.is_zero() {
                let y2 = (&n * 4i32) / 3i32;
                let y = y2.sqrt();
                if &y * &y != y2 {
                    continue;
                }
                vec![y.clone(), -y]
            } else {
                if !self.b.is_multiple_of(&x) {
                    continue;
                }
                vec![&self.b / &x]
            };
            for y in ys {
                let p2 = &x + &y;
                if !p2.is_even() {
                    continue;
                }
                let z = EisensteinInt::new(p2 / 2i32, y);
                if &(&z * &z) == self {
                    return Some(z);
                }
            }
        }
        None
    }
}

fn distinguished_beta_free(c: &EisensteinInt) -> EisensteinInt {
    if c.is_unit() {
        return EisensteinInt::one();
    }
    let mut primary = None;
    for unit in Unit::ALL {
        let z = c.mul_unit(unit);
        if z.is_rational() && z.a.is_positive() {
            return z;
        }
        if z.is_primary() {
            primary = Some(z);
        }
    }
    primary.expect("every class prime to beta has a primary member")
}

/// `round(n / d)` for `d > 0`, halves rounded away from zero.
fn round_half_away(n: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let q = (n.abs() * &two + d).div_floor(&(d * &two));
    if n.is_negative() {
        -q
    } else {
        q
    }
}

/// One of the six units `±1, ±w, ±w^2`, stored as `(-1)^negative * w^power`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Unit {
    negative: bool,
    power: u8,
}

impl Unit {
    pub const ONE: Unit = Unit { negative: false, power: 0 };
    pub const NEG_ONE: Unit = Unit { negative: true, power: 0 };
    pub const OMEGA: Unit = Unit { negative: false, power: 1 };
    pub const NEG_OMEGA: Unit = Unit { negative: true, power: 1 };
    pub const OMEGA_SQ: Unit = Unit { negative: false, power: 2 };
    pub const NEG_OMEGA_SQ: Unit = Unit { negative: true, power: 2 };

    pub const ALL: [Unit; 6] = [
        Unit::ONE,
        Unit::NEG_ONE,
        Unit::OMEGA,
        Unit::NEG_OMEGA,
        Unit::OMEGA_SQ,
        Unit::NEG_OMEGA_SQ,
    ];

    /// The cube roots of unity `1, w, w^2`.
    pub const CUBE_ROOTS: [Unit; 3] = [Unit::ONE, Unit::OMEGA, Unit::OMEGA_SQ];

    pub fn from_eint(x: &EisensteinInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| &u.to_eint() == x)
    }

    pub fn to_eint(self) -> EisensteinInt {
        let base = match self.power {
            0 => EisensteinInt::one(),
            1 => EisensteinInt::omega(),
            _ => EisensteinInt::omega_sq(),
        };
        if self.negative {
            -base
        } else {
            base
        }
    }

    pub fn is_negative(self) -> bool {
        self.negative
    }

    /// Exponent `k` in `±w^k`.
    pub fn power(self) -> u8 {
        self.power
    }

    /// Drops the sign, landing in `{1, w, w^2}`.
    pub fn unsigned(self) -> Unit {
        Unit {
            negative: false,
            power: self.power,
        }
    }

    pub fn inverse(self) -> Unit {
        Unit {
            negative: self.negative,
            power: (3 - self.power) % 3,
        }
    }

    pub fn conj(self) -> Unit {
        self.inverse()
    }

    pub fn is_cube(self) -> bool {
        self.power == 0
    }
}

impl Mul for Unit {
    type Output = Unit;
    fn mul(self, rhs: Unit) -> Unit {
        Unit {
            negative: self.negative != rhs.negative,
            power: (self.power + rhs.power) % 3,
        }
    }
}

impl Neg for Unit {
    type Output = Unit;
    fn neg(self) -> Unit {
        Unit {
            negative: !self.negative,
            power: self.power,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_eint().fmt(f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a EisensteinInt> for &'a EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: &'a EisensteinInt) -> EisensteinInt {
                let f: fn(&EisensteinInt, &EisensteinInt) -> EisensteinInt = $body;
                f(self, rhs)
            }
        }
        impl $trait<EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a EisensteinInt> for EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: &'a EisensteinInt) -> EisensteinInt {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<EisensteinInt> for &'a EisensteinInt {
            type Output = EisensteinInt;
            fn $method(self, rhs: EisensteinInt) -> EisensteinInt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| EisensteinInt::new(&x.a + &y.a, &x.b + &y.b));
forward_binop!(Sub, sub, |x, y| EisensteinInt::new(&x.a - &y.a, &x.b - &y.b));
// (a1 + b1 w)(a2 + b2 w) = (a1 a2 - b1 b2) + (a1 b2 + a2 b1 - b1 b2) w
forward_binop!(Mul, mul, |x, y| {
    let bb = &x.b * &y.b;
    EisensteinInt::new(&x.a * &y.a - &bb, &x.a * &y.b + &y.a * &x.b - bb)
});

impl AddAssign<&EisensteinInt> for EisensteinInt {
    fn add_assign(&mut self, rhs: &EisensteinInt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&EisensteinInt> for EisensteinInt {
    fn sub_assign(&mut self, rhs: &EisensteinInt) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&EisensteinInt> for EisensteinInt {
    fn mul_assign(&mut self, rhs: &EisensteinInt) {
        *self = &*self * rhs;
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-self.a, -self.b)
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-self.a.clone(), -self.b.clone())
    }
}

impl From<i64> for EisensteinInt {
    fn from(n: i64) -> Self {
        EisensteinInt::from_int(n)
    }
}

impl From<BigInt> for EisensteinInt {
    fn from(n: BigInt) -> Self {
        EisensteinInt::from_int(n)
    }
}

fn fmt_omega_term(f: &mut fmt::Formatter<'_>, b: &BigInt) -> fmt::Result {
    if b.is_one() {
        write!(f, "w")
    } else if (-b).is_one() {
        write!(f, "-w")
    } else {
        write!(f, "{b}*w")
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (_, true) => write!(f, "{}", self.a),
            (true, false) => fmt_omega_term(f, &self.b),
            (false, false) => {
                write!(f, "{}", self.a)?;
                if self.b.is_positive() {
                    write!(f, "+")?;
                }
                fmt_omega_term(f, &self.b)
            }
        }
    }
}

impl FromStr for EisensteinInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        crate::syntax::parse_eint(&cleaned)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn omega_squared_is_omega_sq() {
        assert_eq!(e(0, 1) * e(0, 1), e(-1, -1));
        assert_eq!(EisensteinInt::omega() * EisensteinInt::omega_sq(), e(1, 0));
    }

    #[test]
    fn beta_powers() {
        assert_eq!(EisensteinInt::beta().pow(2), e(-3, 0));
        assert_eq!(EisensteinInt::beta().pow(3), e(-3, -6));
        assert_eq!(EisensteinInt::beta().pow(4), e(9, 0));
    }

    #[test]
    fn one_minus_two_v_cubed() {
        // (1 - 2v)^3 = 19u + v
        let x = EisensteinInt::one() - EisensteinInt::omega_sq().scale(&BigInt::from(2));
        assert_eq!(x, e(3, 2));
        assert_eq!(x.pow(3), e(-1, 18));
        assert_eq!(x.pow(3), EisensteinInt::from_uv(19, 1));
    }

    #[test]
    fn norms() {
        assert_eq!(EisensteinInt::beta().norm(), BigInt::from(3));
        assert_eq!(e(-2, 3).norm(), BigInt::from(19));
        assert_eq!(EisensteinInt::from_uv(5, 2), e(-2, 3));
        assert_eq!(e(1, 9).norm(), BigInt::from(73));
        assert_eq!(e(0, 0).norm(), BigInt::from(0));
    }

    #[test]
    fn conj_formula() {
        assert_eq!(e(5, 2).conj(), e(3, -2));
        assert_eq!(EisensteinInt::omega().conj(), EisensteinInt::omega_sq());
    }

    #[test]
    fn uv_round_trip() {
        let x = e(7, -3);
        let (a, b) = x.to_uv();
        assert_eq!(EisensteinInt::from_uv(a, b), x);
    }

    #[test]
    fn divmod_by_self_and_zero() {
        let m = e(4, -7);
        assert_eq!(m.divmod(&m).unwrap(), (e(1, 0), e(0, 0)));
        assert_eq!(m.divmod(&e(0, 0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn divmod_matches_exhaustive_neighbourhood() {
        // oracle: brute force over a generous box of quotients
        for (l, m) in [(e(5, 0), e(1, 3)), (e(1, 2), e(3, 0)), (e(-17, 40), e(6, -5))] {
            let (q, r) = l.divmod(&m).unwrap();
            assert_eq!(&(&q * &m) + &r, l);
            let mut min_norm: Option<BigInt> = None;
            for qa in -30..=30 {
                for qb in -30..=30 {
                    let n = (&l - &(&e(qa, qb) * &m)).norm();
                    if min_norm.as_ref().is_none_or(|b| n < *b) {
                        min_norm = Some(n);
                    }
                }
            }
            assert_eq!(r.norm(), min_norm.unwrap());
            assert!(BigInt::from(3) * r.norm() <= m.norm());
        }
    }

    #[test]
    fn gcd_examples() {
        let (g, x, y) = e(2, 0).gcd_ext(&e(3, 0)).unwrap();
        assert!(g.is_one());
        assert_eq!(&x * &e(2, 0) + &y * &e(3, 0), g);

        let (g, x, y) = e(7, 0).gcd_ext(&e(1, 3)).unwrap();
        assert_eq!(g.norm(), BigInt::from(7));
        assert!(g.divides(&e(7, 0)) && g.divides(&e(1, 3)));
        assert_eq!(&x * &e(7, 0) + &y * &e(1, 3), g);

        let m = e(-4, 6);
        let (g, _, _) = e(0, 0).gcd_ext(&m).unwrap();
        assert_eq!(g, m.canonical_associate().unwrap().1);
        assert_eq!(e(0, 0).gcd_ext(&e(0, 0)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn ord_beta_examples() {
        assert_eq!(EisensteinInt::beta().ord_beta().unwrap(), 1);
        assert_eq!(e(9, 0).ord_beta().unwrap(), 4);
        assert_eq!(e(18, 0).ord_beta().unwrap(), 4);
        assert_eq!(e(0, 0).ord_beta(), Err(Error::OrdOfZero));
    }

    #[test]
    fn canonical_associates() {
        assert_eq!(e(-2, 3).canonical_associate().unwrap(), (Unit::ONE, e(-2, 3)));
        assert_eq!(e(0, 1).canonical_associate().unwrap(), (Unit::OMEGA, e(1, 0)));
        assert_eq!(e(-5, 0).canonical_associate().unwrap(), (Unit::NEG_ONE, e(5, 0)));
        assert_eq!(e(3, 0).canonical_associate().unwrap(), (Unit::NEG_ONE, e(-3, 0)));
        assert_eq!(
            e(0, 0).canonical_associate(),
            Err(Error::ZeroArgument("distinguished associate"))
        );
    }

    #[test]
    fn mod9_examples() {
        assert_eq!(e(10, 0).mod9_class(), e(1, 0));
        assert_eq!(EisensteinInt::beta().pow(3).mod9_class(), e(6, 3));
    }

    #[test]
    fn units_are_pairwise_incongruent_mod_3() {
        let three = BigInt::from(3);
        for (i, x) in Unit::ALL.iter().enumerate() {
            assert!(x.to_eint().is_unit());
            assert_eq!(*x * x.inverse(), Unit::ONE);
            for y in &Unit::ALL[i + 1..] {
                let d = x.to_eint() - y.to_eint();
                assert!(!(d.a().is_multiple_of(&three) && d.b().is_multiple_of(&three)));
            }
        }
    }

    #[test]
    fn exact_square_roots() {
        for a in -6..=6 {
            for b in -6..=6 {
                let z = e(a, b);
                let sq = &z * &z;
                let r = sq.sqrt().unwrap();
                assert!(r == z || r == -z.clone());
            }
        }
        assert_eq!(e(2, 0).sqrt(), None);
        assert_eq!(EisensteinInt::beta().sqrt(), None);
        // w = (w^2)^2
        assert_eq!(e(0, 1).sqrt().map(|z| &z * &z), Some(e(0, 1)));
        assert_eq!(e(-3, 0).sqrt().map(|z| &z * &z), Some(e(-3, 0)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(e(1, 2).to_string(), "1+2*w");
        assert_eq!(e(-2, 3).to_string(), "-2+3*w");
        assert_eq!(e(0, -1).to_string(), "-w");
        assert_eq!(e(3, -1).to_string(), "3-w");
        assert_eq!(e(0, 0).to_string(), "0");
        assert_eq!(e(5, 0).to_string(), "5");
    }
}
