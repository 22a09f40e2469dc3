//! Elements of `K = Q(w)` as a reduced Eisenstein numerator over a positive
//! rational denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};

/// `num / den` with `den >= 1` and `gcd(den, num.a, num.b) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KElement {
    num: EisensteinInt,
    den: BigInt,
}

impl KElement {
    pub fn new(num: EisensteinInt, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: EisensteinInt, den: BigInt) -> Self {
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = den.gcd(num.a()).gcd(num.b());
        if g.is_one() {
            KElement { num, den }
        } else {
            let num = EisensteinInt::new(num.a() / &g, num.b() / &g);
            KElement { num, den: den / g }
        }
    }

    pub fn from_eint(x: EisensteinInt) -> Self {
        KElement {
            num: x,
            den: BigInt::one(),
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_eint(EisensteinInt::from_int(n))
    }

    /// The rational number `n / d`.
    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        KElement::new(EisensteinInt::from_int(n), d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn num(&self) -> &EisensteinInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.num.is_rational()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the element lies in `O`.
    pub fn to_eint(&self) -> Option<EisensteinInt> {
        self.is_integral().then(|| self.num.clone())
    }

    pub fn conj(&self) -> Self {
        KElement {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    pub fn norm(&self) -> (BigInt, BigInt) {
        (self.num.norm(), &self.den * &self.den)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1 / (n/d) = d * conj(n) / N(n)
        Ok(Self::reduced(self.num.conj().scale(&self.den), self.num.norm()))
    }

    pub fn checked_div(&self, rhs: &KElement) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn div_eint(&self, rhs: &EisensteinInt) -> Result<Self> {
        self.checked_div(&KElement::from_eint(rhs.clone()))
    }

    pub fn scale_eint(&self, k: &EisensteinInt) -> Self {
        Self::reduced(&self.num * k, self.den.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        KElement {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    pub fn cube(&self) -> Self {
        self.pow(3)
    }
}

impl Add for &KElement {
    type Output = KElement;
    fn add(self, rhs: &KElement) -> KElement {
        let num = self.num.scale(&rhs.den) + rhs.num.scale(&self.den);
        KElement::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for &KElement {
    type Output = KElement;
    fn sub(self, rhs: &KElement) -> KElement {
        let num = self.num.scale(&rhs.den) - rhs.num.scale(&self.den);
        KElement::reduced(num, &self.den * &rhs.den)
    }
}

impl Mul for &KElement {
    type Output = KElement;
    fn mul(self, rhs: &KElement) -> KElement {
        KElement::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Add for KElement {
    type Output = KElement;
    fn add(self, rhs: KElement) -> KElement {
        &self + &rhs
    }
}

impl Sub for KElement {
    type Output = KElement;
    fn sub(self, rhs: KElement) -> KElement {
        &self - &rhs
    }
}

impl Mul for KElement {
    type Output = KElement;
    fn mul(self, rhs: KElement) -> KElement {
        &self * &rhs
    }
}

impl Neg for KElement {
    type Output = KElement;
    fn neg(self) -> KElement {
        KElement {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &KElement {
    type Output = KElement;
    fn neg(self) -> KElement {
        -self.clone()
    }
}

impl From<EisensteinInt> for KElement {
    fn from(x: EisensteinInt) -> Self {
        KElement::from_eint(x)
    }
}

impl From<i64> for KElement {
    fn from(n: i64) -> Self {
        KElement::from_int(n)
    }
}

impl PartialOrd for KElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for KElement {
    /// Structural order (denominator, then numerator coordinates); not a field order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.den(), self.num().a(), self.num().b()).cmp(&(other.den(), other.num().a(), other.num().b()))
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.a().is_zero() || self.num.b().is_zero() {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl FromStr for KElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::syntax::parse_kelem(s)
    }
}
