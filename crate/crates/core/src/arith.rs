//! Rational-integer support: primality, factoring, exact roots, modular powers.
//!
//! Factoring is trial division by primes below 10^6 followed by Pollard rho.
//! Primality below 2^64 uses Miller-Rabin with the first twelve prime bases,
//! which is deterministic in that range; larger inputs use the same bases
//! plus 20 more and are therefore probabilistic (no certificates).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 1_000_000;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const EXTRA_BASES: [u64; 20] = [
    41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
];

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

/// Primes below `n` in increasing order.
pub fn primes_below(n: u64) -> Vec<u64> {
    if n <= TRIAL_LIMIT as u64 {
        return small_primes()
            .iter()
            .map(|&p| p as u64)
            .take_while(|&p| p < n)
            .collect();
    }
    (2..n).filter(|&k| is_prime_u64(k)).collect()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn mr_round_u64(n: u64, d: u64, s: u32, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod_u64(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    MR_BASES.iter().all(|&a| mr_round_u64(n, d, s, a))
}

pub fn is_prime(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_negative() {
        return false;
    }
    for &p in MR_BASES.iter() {
        if n.is_multiple_of(&BigInt::from(p)) {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    MR_BASES.iter().chain(EXTRA_BASES.iter()).all(|&a| {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            return true;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                return true;
            }
        }
        false
    })
}

fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn rho_big(n: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    if n.is_even() {
        return two;
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (two.clone(), two.clone(), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

fn split_large(n: BigInt, out: &mut BTreeMap<BigInt, u32>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = match n.to_u64() {
        Some(small) => BigInt::from(rho_u64(small)),
        None => rho_big(&n),
    };
    let rest = &n / &d;
    split_large(d, out);
    split_large(rest, out);
}

/// Prime factorization of `|n|`, `n != 0`, as an ordered map prime -> exponent.
pub fn factor_int(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(!n.is_zero(), "factor_int of zero");
    let mut out = BTreeMap::new();
    let mut n = n.abs();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.insert(pb, e);
        }
    }
    split_large(n, &mut out);
    out
}

/// All positive divisors of a number given by its factorization, ascending.
pub fn divisors(factors: &BTreeMap<BigInt, u32>) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, &e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Integer cube root when `n` is a perfect cube (negative inputs allowed).
pub fn perfect_cube_root(n: &BigInt) -> Option<BigInt> {
    let r = n.abs().cbrt();
    if &r * &r * &r != n.abs() {
        return None;
    }
    Some(if n.is_negative() { -r } else { r })
}

/// Exact integer cube root of an `i128`, if it exists.
pub fn icbrt_i128(n: i128) -> Option<i128> {
    let target = n.unsigned_abs();
    let (mut lo, mut hi) = (0u128, 1u128 << 43);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if mid.checked_pow(3).is_some_and(|c| c <= target) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    (lo.pow(3) == target).then(|| if n < 0 { -(lo as i128) } else { lo as i128 })
}

/// `x mod p` in `[0, p)`.
pub fn mod_floor(x: &BigInt, p: &BigInt) -> BigInt {
    x.mod_floor(p)
}

/// Inverse of `x` modulo prime `p`, `x` not divisible by `p`.
pub fn inv_mod(x: &BigInt, p: &BigInt) -> BigInt {
    let e = x.extended_gcd(p);
    assert!(e.gcd.is_one(), "inverse of non-unit");
    e.x.mod_floor(p)
}
