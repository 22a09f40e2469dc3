//! Randomized invariants, 1000 cases each (200 for the classifier grid), fixed seed.

use std::collections::BTreeSet;

use cubesum::constructors::{descent_step, lucas_pair, tangent_step, DescentOutcome, Point, Triple};
use cubesum::search::{naive_numerator_bound, naive_rational, search_rational};
use cubesum::{classify, factor, EisensteinInt, KElement, Scope, SearchBudget, Status, Unit, Verdict};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed};

const SEED: u64 = 0x5EED_C0BE;

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

fn eint(bound: i64) -> impl Strategy<Value = EisensteinInt> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| EisensteinInt::new(a, b))
}

fn nonzero(bound: i64) -> impl Strategy<Value = EisensteinInt> {
    eint(bound).prop_filter("non-zero", |x| !x.is_zero())
}

fn kelem(bound: i64) -> impl Strategy<Value = KElement> {
    (eint(bound), 1..=bound).prop_map(|(n, d)| KElement::new(n, d).unwrap())
}

fn ord_beta_by_division(x: &EisensteinInt) -> u32 {
    let beta = EisensteinInt::beta();
    let mut x = x.clone();
    let mut k = 0;
    while let Some(q) = x.div_exact(&beta) {
        x = q;
        k += 1;
    }
    k
}

fn is_prime_naive(n: &BigInt) -> bool {
    let n = n.to_string().parse::<u64>().unwrap();
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn ring_laws(x in eint(1_000_000), y in eint(1_000_000), z in eint(1_000_000)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(&x * &x.conj(), EisensteinInt::from_int(x.norm()));
        // 4N(a + bw) = (2a - b)^2 + 3b^2
        let two_a_minus_b = x.a() * 2 - x.b();
        prop_assert_eq!(x.norm() * 4, &two_a_minus_b * &two_a_minus_b + x.b() * x.b() * 3);
    }

    #[test]
    fn euclidean_bound(x in eint(1_000_000_000), m in nonzero(1_000_000)) {
        let (q, r) = x.divmod(&m).unwrap();
        prop_assert_eq!(&(&q * &m) + &r, x);
        prop_assert!(r.norm() * 3 <= m.norm());
    }

    #[test]
    fn bezout(x in nonzero(100_000), y in nonzero(100_000)) {
        let (g, s, t) = x.gcd_ext(&y).unwrap();
        prop_assert!(g.divides(&x) && g.divides(&y));
        prop_assert_eq!(&(&s * &x) + &(&t * &y), g);
    }

    #[test]
    fn associates_share_one_canonical_form(x in nonzero(100_000)) {
        let (unit, x0) = x.canonical_associate().unwrap();
        prop_assert_eq!(x0.mul_unit(unit), x.clone());
        for u in Unit::ALL {
            prop_assert_eq!(x.mul_unit(u).canonical_associate().unwrap().1, x0.clone());
        }
    }

    #[test]
    fn factorization_round_trip(x in nonzero(100_000)) {
        let f = factor(&x).unwrap();
        prop_assert_eq!(f.reconstruct(), x);
        for (p, e) in &f.factors {
            prop_assert!(*e > 0);
            prop_assert_eq!(p.canonical_associate().unwrap(), (Unit::ONE, p.clone()));
            let n = p.norm();
            let prime_norm = is_prime_naive(&n);
            let inert_square = p.is_rational() && &(p.a() * p.a()) == &n && is_prime_naive(p.a());
            prop_assert!(prime_norm || inert_square, "{} is not irreducible", p);
        }
    }

    #[test]
    fn ord_beta_additive(x in nonzero(100_000), y in nonzero(100_000)) {
        let (ox, oy) = (x.ord_beta().unwrap(), y.ord_beta().unwrap());
        prop_assert_eq!(ox, ord_beta_by_division(&x));
        prop_assert_eq!((&x * &y).ord_beta().unwrap(), ox + oy);
    }

    #[test]
    fn cubes_prime_to_beta_are_plus_minus_one_mod_9(x in nonzero(1_000_000)) {
        prop_assume!(!(x.a() + x.b()).is_multiple_of(&BigInt::from(3)));
        let c = x.cube();
        let nine = BigInt::from(9);
        prop_assert!(c.b().is_multiple_of(&nine));
        let one = BigInt::from(1);
        prop_assert!((c.a() - &one).is_multiple_of(&nine) || (c.a() + &one).is_multiple_of(&nine));
    }

    #[test]
    fn field_laws_and_round_trip(x in kelem(10_000), y in kelem(10_000)) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(x.to_string().parse::<KElement>().unwrap(), x.clone());
        prop_assert_eq!(x.num().to_string().parse::<EisensteinInt>().unwrap(), x.num().clone());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), KElement::one());
        }
    }

    #[test]
    fn lucas_identities(a in -1_000_000i64..=1_000_000, b in -1_000_000i64..=1_000_000) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let (x, y) = lucas_pair(a.clone(), b.clone());
        prop_assert_eq!(&x + &y, BigInt::from(9) * &a * &b * (&a + &b));
        let q = &a * &a + &a * &b + &b * &b;
        prop_assert_eq!(&x * &x - &x * &y + &y * &y, BigInt::from(3) * q.pow(3));
    }

    #[test]
    fn descent_product_identity(r in nonzero(60), s in nonzero(60)) {
        let (a, b) = (r.cube(), s.cube());
        prop_assume!(a != b && !(&a + &b).is_zero());
        let c = -(&a + &b);
        let t = Triple::new(a, b, c.clone(), -c).unwrap();
        if let DescentOutcome::Step { from, to, .. } = descent_step(&t).unwrap() {
            prop_assert_eq!(to.product(), -from.c.clone());
            prop_assert_eq!(to.norm_product(), from.c.norm());
        }
    }

    #[test]
    fn tangent_points_stay_on_curve(a in -50i64..=50, b in -50i64..=50) {
        let m = KElement::from_int(a.pow(3) + b.pow(3));
        prop_assume!(!m.is_zero() && a != 0 && b != 0 && a != b);
        let p = (KElement::from_int(a), KElement::from_int(b));
        let t = tangent_step(&m, &p).unwrap();
        prop_assert_eq!(&t.0.cube() + &t.1.cube(), m);
    }

    #[test]
    fn rational_search_matches_naive(m in 1i64..=20) {
        let m = BigInt::from(m);
        let h = 2;
        let fast: BTreeSet<Point> = search_rational(&m, h).into_iter().collect();
        let slow: BTreeSet<Point> = naive_rational(&m, h, naive_numerator_bound(&m, h)).into_iter().collect();
        prop_assert_eq!(fast, slow);
    }
}

fn same_up_to(a: &Point, b: &Point, c: &KElement) -> bool {
    Unit::CUBE_ROOTS.iter().any(|z| {
        let f = &KElement::from_eint(z.to_eint()) * c;
        a.0 == &b.0 * &f && a.1 == &b.1 * &f
    })
}

fn solution_set(v: &Verdict) -> Option<BTreeSet<Point>> {
    match &v.status {
        Status::OnlyTrivial(s) => Some(s.iter().cloned().collect()),
        _ => None,
    }
}

fn budget() -> SearchBudget {
    SearchBudget { denom_bound: 6, coord_bound: 4, relation_bound: 4, lucas_bound: 10 }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn classify_is_a_cube_class_invariant(m in nonzero(15), c in nonzero(4)) {
        let (m, c) = (KElement::from_eint(m), KElement::from_eint(c));
        let v = classify(&m, Scope::K, &budget()).unwrap();
        let w = classify(&(&m * &c.cube()), Scope::K, &budget()).unwrap();
        prop_assert_eq!(v.status.name(), w.status.name());
        prop_assert_eq!(&v.rule.name, &w.rule.name);
        prop_assert_eq!(v.rule.tag, w.rule.tag);
        prop_assert_eq!(&v.canonical, &w.canonical);
        if let (Status::HasSolutions(a), Status::HasSolutions(b)) = (&v.status, &w.status) {
            prop_assert!(same_up_to(b, a, &c), "witness of M c^3 is not c times a witness of M");
        }
        if let (Some(a), Some(b)) = (solution_set(&v), solution_set(&w)) {
            let scaled: BTreeSet<Point> = a.iter().map(|p| (&p.0 * &c, &p.1 * &c)).collect();
            prop_assert_eq!(scaled.len(), b.len());
            prop_assert!(scaled.iter().all(|p| b.iter().any(|q| same_up_to(q, p, &KElement::one()))));
        }
    }

    #[test]
    fn classify_respects_sign_and_conjugation(m in nonzero(15)) {
        let m = KElement::from_eint(m);
        let v = classify(&m, Scope::K, &budget()).unwrap();
        let neg = classify(&-&m, Scope::K, &budget()).unwrap();
        let bar = classify(&m.conj(), Scope::K, &budget()).unwrap();
        for w in [&neg, &bar] {
            prop_assert_eq!(v.status.name(), w.status.name());
            prop_assert_eq!(&v.rule.name, &w.rule.name);
            prop_assert_eq!(v.rule.tag, w.rule.tag);
        }
        prop_assert_eq!(&bar.canonical, &v.canonical.conj());
        if let Status::HasSolutions((x, y)) = &v.status {
            prop_assert_eq!(neg.witness(), Some(&(-x, -y)));
            prop_assert_eq!(bar.witness(), Some(&(x.conj(), y.conj())));
        }
        if let (Some(a), Some(b)) = (solution_set(&v), solution_set(&bar)) {
            prop_assert_eq!(a.iter().map(|p| (p.0.conj(), p.1.conj())).collect::<BTreeSet<_>>(), b);
        }
    }

    #[test]
    fn rational_verdicts_are_rational(n in -200i64..=200) {
        prop_assume!(n != 0);
        let m = KElement::from_int(n);
        let v = classify(&m, Scope::Q, &budget()).unwrap();
        if let Some((x, y)) = v.witness() {
            prop_assert!(x.is_rational() && y.is_rational());
            prop_assert_eq!(&x.cube() + &y.cube(), m);
        }
        prop_assert!(v.rule.tag.is_some() || !matches!(v.status, Status::NoSolutions | Status::OnlyTrivial(_)));
    }
}

#[test]
fn cube_triples_in_the_box_have_unit_structure() {
    let mut found = 0;
    for a1 in -6i64..=6 {
        for a2 in -6i64..=6 {
            for b1 in -6i64..=6 {
                for b2 in -6i64..=6 {
                    let a = EisensteinInt::new(a1, a2);
                    let b = EisensteinInt::new(b1, b2);
                    let c = -(&a + &b);
                    if a.is_zero() || b.is_zero() || c.is_zero() {
                        continue;
                    }
                    let prod = &(&a * &b) * &c;
                    let f = factor(&prod).unwrap();
                    let cube = f.unit.is_cube() && f.factors.iter().all(|(_, e)| e % 3 == 0);
                    if cube {
                        found += 1;
                        let (base, ks) = cubesum::constructors::cube_triple_structure(&a, &b, &c).unwrap();
                        for (x, k) in [&a, &b, &c].into_iter().zip(ks) {
                            assert_eq!(*x, base.mul_unit(Unit::CUBE_ROOTS[k as usize]));
                        }
                    }
                }
            }
        }
    }
    assert!(found > 0);
}
