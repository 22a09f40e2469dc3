//! Published numeric values, and brute-force oracles for the computed predicates.

use std::collections::BTreeSet;

use cubesum::constructors::{lucas_pair, solution_from_relation};
use cubesum::criteria::{condition_i, exceptional_a, exceptional_b, uv_coordinates};
use cubesum::factorization::{residue_split, split_prime, split_prime_by_enumeration};
use cubesum::search::search_rational;
use cubesum::tables::condition_i_table;
use cubesum::{classify_rational_prime, EisensteinInt, KElement, PrimeClass};
use num_bigint::BigInt;
use num_integer::Roots;

fn k(s: &str) -> KElement {
    s.parse().unwrap()
}

fn e(s: &str) -> EisensteinInt {
    s.parse().unwrap()
}

fn primes_1_mod_3(below: u64) -> Vec<u64> {
    (7..below)
        .filter(|&n| n % 3 == 1 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

fn cubes_mod(p: u64) -> BTreeSet<u64> {
    (1..p).map(|c| c * c % p * c % p).collect()
}

fn pow_mod(b: u64, e: u64, p: u64) -> u64 {
    BigInt::from(b).modpow(&BigInt::from(e), &BigInt::from(p)).try_into().unwrap()
}

#[test]
fn condition_i_against_cube_enumeration() {
    for p in primes_1_mod_3(1500) {
        let (a, b) = uv_coordinates(&split_prime(&BigInt::from(p)));
        let s: i64 = (a + b).try_into().unwrap();
        let residue = s.rem_euclid(p as i64) as u64;
        assert!(cubes_mod(p).contains(&residue), "p={p}");
        assert!(condition_i(p).unwrap());
    }
}

#[test]
fn exceptional_sets_against_brute_force() {
    for p in primes_1_mod_3(1500) {
        let b_brute = cubes_mod(p).contains(&(3 % p));
        assert_eq!(exceptional_b(p).unwrap(), b_brute, "p={p}");
        let four_p = 4 * p as i64;
        let a_brute = (0..).take_while(|y| 243 * y * y <= four_p).any(|y| {
            let r = four_p - 243 * y * y;
            let x = r.sqrt();
            x * x == r
        });
        let (a, witness) = exceptional_a(p).unwrap();
        assert_eq!(a, a_brute, "p={p}");
        if let Some((x, y)) = witness {
            assert_eq!(&x * &x + BigInt::from(243) * &y * &y, BigInt::from(four_p));
        }
    }
}

#[test]
fn split_primes_agree_with_enumeration() {
    for p in primes_1_mod_3(3000) {
        let p = BigInt::from(p);
        let pi = split_prime(&p);
        assert_eq!(pi.norm(), p);
        assert!(pi.is_primary());
        assert_eq!(&pi * &pi.conj(), EisensteinInt::from_int(p.clone()));
        assert_eq!(split_prime_by_enumeration(&p), Some(pi));
    }
}

#[test]
fn prime_seven() {
    match classify_rational_prime(7).unwrap() {
        PrimeClass::Split { pi, pi_bar } => {
            assert_eq!(pi, e("1+3*w"));
            assert_eq!(pi, e("2*u-v"));
            assert_eq!(pi_bar, pi.conj());
        }
        other => panic!("{other:?}"),
    }
    let c = residue_split(&EisensteinInt::omega(), &e("1+3*w"), &BigInt::from(7)).unwrap();
    assert_eq!(c, BigInt::from(2));
    assert_eq!((&c * &c + &c + 1u32) % 7u32, BigInt::from(0));
    let (g, _, _) = EisensteinInt::from_int(7).gcd_ext(&e("1+3*w")).unwrap();
    assert_eq!(g.norm(), BigInt::from(7));
}

#[test]
fn condition_i_table_sums() {
    let rows: Vec<(u64, i64)> = condition_i_table(73).iter().map(|r| (r.p, r.sum)).collect();
    assert_eq!(
        rows,
        [(7, 1), (13, -5), (19, 7), (31, 4), (37, -11), (43, -8), (61, 1), (67, -5), (73, 7)]
    );
}

#[test]
fn modular_hand_computations() {
    // 31: 4 = -27
    assert_eq!((4 + 27) % 31, 0);
    // 73: 5^3 = -21, 6^3 = -3, 3^4 = 8, 3^8 = -9, 3^12 = 1
    assert_eq!(pow_mod(5, 3, 73), 73 - 21);
    assert_eq!(pow_mod(6, 3, 73), 73 - 3);
    assert_eq!(pow_mod(3, 4, 73), 8);
    assert_eq!(pow_mod(3, 8, 73), 73 - 9);
    assert_eq!(pow_mod(3, 12, 73), 1);
    // 79: 3^4 = 2, 3^12 = 8, 3^13 = 24; 17 is a cube
    assert_eq!(pow_mod(3, 4, 79), 2);
    assert_eq!(pow_mod(3, 12, 79), 8);
    assert_eq!(pow_mod(3, 13, 79), 24);
    assert_eq!(pow_mod(17, 26, 79), 1);
    // 97: 19^2 = -27, 19^32 = 1
    assert_eq!(pow_mod(19, 2, 97), 97 - 27);
    assert_eq!(pow_mod(19, 32, 97), 1);
    // pi for 79 and 97 in the u, v basis; neither is Exceptional A
    assert_eq!(e("-10*u-7*v").norm(), BigInt::from(79));
    assert_eq!(e("11*u+8*v").norm(), BigInt::from(97));
    assert!(!exceptional_a(79).unwrap().0 && !exceptional_a(97).unwrap().0);
}

#[test]
fn exceptional_a_witnesses() {
    for (p, x) in [(61, 1), (67, 5), (73, 7), (103, 13), (151, 19), (193, 23)] {
        assert_eq!(4 * p, x * x + 243);
        assert!(exceptional_a(p).unwrap().0);
    }
}

#[test]
fn explicit_identities() {
    // 17 = (18/7)^3 - (1/7)^3
    assert_eq!(&k("18/7").cube() + &k("-1/7").cube(), KElement::from_int(17));
    // 18u = (1 - 2v)^3 + 1^3
    let v = EisensteinInt::omega_sq();
    let x = &EisensteinInt::one() - &(&EisensteinInt::from_int(2) * &v);
    assert_eq!(x, e("3+2*w"));
    assert_eq!(&x.cube() + &EisensteinInt::one(), e("18*w"));
    // 6 = (37/21)^3 + (17/21)^3; 7 = 2^3 + (-1)^3 = (4/3)^3 + (5/3)^3
    assert!(search_rational(&BigInt::from(6), 21).contains(&(k("37/21"), k("17/21"))));
    assert_eq!(&k("4/3").cube() + &k("5/3").cube(), KElement::from_int(7));
    // Lucas at (64, -3)
    let (x, y) = lucas_pair(64, -3);
    assert_eq!((x.clone(), y.clone()), (BigInt::from(190171), BigInt::from(-295579)));
    assert_eq!(x.pow(3) + y.pow(3), BigInt::from(-183) * BigInt::from(46956).pow(3));
}

#[test]
fn twisted_pi_relation() {
    // v*pi = u*beta^3 + v for pi = 5u + 2v
    let pi = e("5*u+2*v");
    let (u, v) = (EisensteinInt::omega(), EisensteinInt::omega_sq());
    let m = &v * &pi;
    let beta = EisensteinInt::beta();
    assert_eq!(m, &(&u * &beta.cube()) + &v);
    let (x, y) = solution_from_relation(&beta, &EisensteinInt::one(), &-EisensteinInt::one(), &m).unwrap();
    assert_eq!(&x.cube() + &y.cube(), KElement::from_eint(m));
}
