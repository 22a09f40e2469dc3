//! Text syntax for elements of `O` and `K`.
//!
//! ```text
//! integer ::= ['-'] digits
//! eint    ::= term (('+' | '-') term)*
//! term    ::= integer | [integer '*'] ('w' | 'u' | 'v')
//! kelem   ::= eint ['/' positive-integer] | '(' eint ')' '/' positive-integer
//! ```
//!
//! `w` and `u` both denote the cube root of unity `w`; `v` denotes
//! `w^2 = -1 - w`, so the `{u, v}` spelling `5*u+2*v` is accepted too.
//! Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::kelement::KElement;

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn parse_int(token: &str) -> Result<BigInt> {
    token
        .parse::<BigInt>()
        .map_err(|_| Error::parse(token, "expected an integer"))
}

/// Parses an element of `O`. The input must already be free of whitespace.
pub fn parse_eint(s: &str) -> Result<EisensteinInt> {
    if s.is_empty() {
        return Err(Error::parse(s, "empty element"));
    }
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s);
    let bytes = inner.as_bytes();
    let mut acc = EisensteinInt::zero();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let negative = match bytes[i] {
            b'+' if i > 0 => {
                i += 1;
                false
            }
            b'-' => {
                i += 1;
                true
            }
            _ if i == 0 => false,
            _ => return Err(Error::parse(&inner[i..], "expected '+' or '-'")),
        };
        let mut j = i;
        while j < bytes.len() && bytes[j] != b'+' && !(bytes[j] == b'-' && j > i) {
            j += 1;
        }
        let body = &inner[i..j];
        let term = parse_term(body).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(&inner[start..j], message),
            other => other,
        })?;
        if negative {
            acc -= &term;
        } else {
            acc += &term;
        }
        i = j;
    }
    Ok(acc)
}

fn parse_term(body: &str) -> Result<EisensteinInt> {
    if body.is_empty() {
        return Err(Error::parse(body, "empty term"));
    }
    let (coef, sym) = match body.rfind(['w', 'u', 'v']) {
        None => return Ok(EisensteinInt::from_int(parse_int(body)?)),
        Some(pos) if pos + 1 != body.len() => {
            return Err(Error::parse(body, "unexpected characters after symbol"))
        }
        Some(pos) => {
            let head = &body[..pos];
            let coef = if head.is_empty() {
                BigInt::from(1)
            } else if let Some(c) = head.strip_suffix('*') {
                parse_int(c)?
            } else {
                return Err(Error::parse(body, "expected '*' before symbol"));
            };
            (coef, &body[pos..])
        }
    };
    let unit = match sym {
        "v" => EisensteinInt::omega_sq(),
        _ => EisensteinInt::omega(),
    };
    Ok(unit.scale(&coef))
}

/// Parses an element of `K`.
pub fn parse_kelem(s: &str) -> Result<KElement> {
    let s = strip_ws(s);
    match s.rsplit_once('/') {
        None => Ok(KElement::from_eint(parse_eint(&s)?)),
        Some((num, den)) => {
            let d = parse_int(den)?;
            if !d.is_positive() {
                return Err(Error::parse(den, "denominator must be positive"));
            }
            let n = parse_eint(num)?;
            KElement::new(n, d)
        }
    }
}

/// Parses a rational integer in the same syntax (e.g. `"183"` or `"-7"`).
pub fn parse_rational_int(s: &str) -> Result<BigInt> {
    let x = parse_eint(&strip_ws(s))?;
    if !x.b().is_zero() {
        return Err(Error::parse(s, "expected a rational integer"));
    }
    Ok(x.a().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn internal_basis() {
        assert_eq!("1+2*w".parse::<EisensteinInt>().unwrap(), e(1, 2));
        assert_eq!("-2+3*w".parse::<EisensteinInt>().unwrap(), e(-2, 3));
        assert_eq!("5".parse::<EisensteinInt>().unwrap(), e(5, 0));
        assert_eq!("-w".parse::<EisensteinInt>().unwrap(), e(0, -1));
        assert_eq!(" 3 - w ".parse::<EisensteinInt>().unwrap(), e(3, -1));
    }

    #[test]
    fn uv_basis() {
        assert_eq!("5*u+2*v".parse::<EisensteinInt>().unwrap(), e(-2, 3));
        assert_eq!("8*u-v".parse::<EisensteinInt>().unwrap(), e(1, 9));
        assert_eq!("1-2*v".parse::<EisensteinInt>().unwrap(), e(3, 2));
    }

    #[test]
    fn fractions() {
        let x = parse_kelem("(2-3*w)/2").unwrap();
        assert_eq!(x.num(), &e(2, -3));
        assert_eq!(x.den(), &BigInt::from(2));
        assert_eq!(parse_kelem("-190171/46956").unwrap().den(), &BigInt::from(46956));
    }

    #[test]
    fn errors_name_the_token() {
        let err = parse_kelem("1+2*x").unwrap_err();
        assert!(matches!(err, Error::Parse { ref token, .. } if token == "+2*x"), "{err}");
        assert!(parse_kelem("3/0").is_err());
        assert!(parse_kelem("").is_err());
        assert!(parse_kelem("1++2").is_err());
        assert!(parse_kelem("2w").is_err());
    }
}
