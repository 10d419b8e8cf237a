mod common;

use std::cmp::Ordering;

use common::*;
use hankel_core::ring::{cmp_monomials, parse_polynomial, Monomial, MonomialOrder, Polynomial};
use hankel_core::{Poly, Rational, SmallRational};
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 4] = [
    MonomialOrder::RevLex,
    MonomialOrder::Lex,
    MonomialOrder::BlockElim(1),
    MonomialOrder::BlockElim(2),
];

fn revlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return da.cmp(&db);
    }
    for k in (0..a.len()).rev() {
        if a[k] != b[k] {
            return b[k].cmp(&a[k]);
        }
    }
    Ordering::Equal
}

proptest! {
    #[test]
    fn orders_are_total_and_antisymmetric(a in monomial(4, 3), b in monomial(4, 3)) {
        for ord in ORDERS {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
        }
    }

    #[test]
    fn orders_are_transitive(a in monomial(4, 2), b in monomial(4, 2), c in monomial(4, 2)) {
        for ord in ORDERS {
            if ord.cmp(&a, &b) != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
            }
        }
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(4, 3), b in monomial(4, 3), c in monomial(4, 3)) {
        for ord in ORDERS {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
        }
    }

    #[test]
    fn one_is_smallest(a in monomial(4, 3)) {
        let one = Monomial::one(4);
        for ord in ORDERS {
            prop_assert_ne!(ord.cmp(&one, &a), Ordering::Greater);
        }
    }

    #[test]
    fn revlex_matches_oracle(a in exponents(5, 3), b in exponents(5, 3)) {
        let got = MonomialOrder::RevLex.cmp(&Monomial::new(a.clone()), &Monomial::new(b.clone()));
        prop_assert_eq!(got, revlex_oracle(&a, &b));
    }

    #[test]
    fn divisibility_and_lcm(a in monomial(4, 3), b in monomial(4, 3)) {
        let l = a.lcm(&b);
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert_eq!(a.quotient_of(&l).unwrap().mul(&a), l.clone());
        prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
    }

    #[test]
    fn ring_axioms(p in raw_poly(4, 2), q in raw_poly(4, 2), r in raw_poly(4, 2)) {
        let c = ctx();
        let (p, q, r): (Poly, Poly, Poly) = (poly_from(&c, &p), poly_from(&c, &q), poly_from(&c, &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p + &(-&p), Polynomial::zero(&c));
        prop_assert_eq!(&p * &Polynomial::one(&c), p.clone());
    }

    #[test]
    fn normalization_is_idempotent(p in raw_poly(6, 2)) {
        let p: Poly = poly_from(&ctx(), &p);
        prop_assert_eq!(p.normalized(), p.clone());
        let twice = p.normalized().normalized();
        prop_assert_eq!(twice.terms(), p.terms());
    }

    #[test]
    fn leading_term_is_maximal(p in raw_poly(5, 3)) {
        let p: Poly = poly_from(&ctx(), &p);
        prop_assume!(!p.is_zero());
        for ord in ORDERS {
            let lm = p.leading_monomial(ord).unwrap();
            for t in p.terms() {
                prop_assert_ne!(ord.cmp(&t.monomial, lm), Ordering::Greater);
            }
        }
    }

    #[test]
    fn printing_round_trips(p in raw_poly(5, 3)) {
        let c = ctx();
        let p: Poly = poly_from(&c, &p);
        for ord in [MonomialOrder::RevLex, MonomialOrder::Lex] {
            let back: Poly = parse_polynomial(&p.to_string_by(ord), &c).unwrap();
            prop_assert_eq!(&back, &p);
        }
    }

    #[test]
    fn small_and_big_rationals_agree(p in raw_poly(3, 2), q in raw_poly(3, 2)) {
        let c = ctx();
        let big = &poly_from::<Rational>(&c, &p) * &poly_from::<Rational>(&c, &q);
        let small = &poly_from::<SmallRational>(&c, &p) * &poly_from::<SmallRational>(&c, &q);
        prop_assert_eq!(big.to_string(), small.to_string());
    }
}

#[test]
fn mismatched_lengths_are_rejected() {
    assert!(cmp_monomials(&Monomial::one(2), &Monomial::one(3), MonomialOrder::RevLex).is_err());
}
