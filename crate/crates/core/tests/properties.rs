use std::cmp::Ordering;
use std::sync::Arc;

use invsys::duality::{contract, perp_ideal, perp_module};
use invsys::groebner::buchberger;
use invsys::rees::{FiltrationContext, MonoidIdeal, Order};
use invsys::{Exponent, Field, Ideal, MonomialOrder, Polynomial, RingContext};
use proptest::prelude::*;

const N: usize = 3;

fn exponent(max: u32) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, N).prop_map(Exponent::new)
}

fn poly(field: Field, terms: usize, max: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((exponent(max), -4i64..=4), 0..=terms).prop_map(move |ts| {
        Polynomial::from_terms(N, field, ts.into_iter().map(|(e, c)| (e, field.from_int(c))))
    })
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(7)), Just(Field::Prime(101))]
}

fn ring() -> Arc<RingContext> {
    Arc::new(RingContext::graded(&["x", "y", "z"], &[]))
}

/// Polynomials without constant term.
fn in_maximal(p: Polynomial) -> Polynomial {
    let constant = Exponent::zero(N);
    Polynomial::from_terms(N, p.field(), p.terms().filter(|(e, _)| **e != constant).map(|(e, c)| (e.clone(), c.clone())))
}

/// An m-primary ideal: a few random generators plus a power of m.
fn primary(level: u32) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(poly(Field::Rational, 3, 3), 1..=3).prop_map(move |gens| {
        let ctx = ring();
        let mut all: Vec<Polynomial> = gens.into_iter().map(in_maximal).filter(|p| !p.is_zero()).collect();
        all.extend(Exponent::all_of_degree(N, level).into_iter().map(|e| ctx.monomial(e)));
        Ideal::new(ctx, all).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in fields().prop_flat_map(|f| (poly(f, 4, 3), poly(f, 4, 3), poly(f, 4, 3)))) {
        let (a, b, c) = f;
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn orders_are_multiplicative_and_refine_divisibility(a in exponent(5), b in exponent(5), c in exponent(5)) {
        for order in [MonomialOrder::grevlex(), MonomialOrder::lex()] {
            let ab = order.cmp(&a, &b);
            prop_assert_eq!(ab, order.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
            if a.divides(&b) {
                prop_assert_ne!(order.cmp(&a, &b), Ordering::Greater);
            }
        }
    }

    #[test]
    fn truncation_is_a_ring_map(p in poly(Field::Rational, 5, 4), q in poly(Field::Rational, 5, 4), n in 0u32..8) {
        let lhs = (&p * &q).truncate(n);
        let rhs = (&p.truncate(n) * &q.truncate(n)).truncate(n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_is_a_module_action(p in poly(Field::Rational, 3, 2), q in poly(Field::Rational, 3, 2), f in poly(Field::Rational, 5, 5)) {
        let lhs = contract(&(&p * &q), &f).unwrap();
        let rhs = contract(&p, &contract(&q, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ord_is_superadditive(p in poly(Field::Rational, 3, 3), q in poly(Field::Rational, 3, 3)) {
        let ctx = ring();
        let g = vec![ctx.parse("x").unwrap(), ctx.parse("y^2 - z").unwrap()];
        let filt = FiltrationContext::new(Ideal::zero(ctx), g).unwrap();
        let cap = 6;
        let value = |o: Order| match o {
            Order::Finite(k) => Some(k),
            _ => None,
        };
        let (op, oq) = (filt.ord(&p, cap).unwrap(), filt.ord(&q, cap).unwrap());
        let opq = filt.ord(&(&p * &q), cap).unwrap();
        if let (Some(a), Some(b)) = (value(op), value(oq)) {
            match opq {
                Order::Finite(c) => prop_assert!(c >= a + b),
                Order::AtLeast(_) | Order::Infinite => {}
            }
        }
    }

    #[test]
    fn monoid_socles_are_corners(gens in prop::collection::vec(prop::collection::vec(0u32..=5, 3), 1..=4)) {
        let gens: Vec<Exponent> = gens.into_iter().map(Exponent::new).filter(|e| !e.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let m = MonoidIdeal::new(3, gens).unwrap();
        let socle = m.socle();
        for n in &socle {
            prop_assert!(!m.contains(n));
            for i in 0..3 {
                prop_assert!(m.contains(&n.mul(&Exponent::unit(3, i, 1))));
            }
        }
        for n in Exponent::all_below(3, 16) {
            if n.entries().iter().all(|&x| x <= 5) && !m.contains(&n)
                && (0..3).all(|i| m.contains(&n.mul(&Exponent::unit(3, i, 1)))) {
                prop_assert!(socle.contains(&n));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_bases_are_canonical(gens in prop::collection::vec(poly(Field::Rational, 3, 3), 1..=3)) {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        for order in [MonomialOrder::grevlex(), MonomialOrder::lex()] {
            let gb = buchberger(&gens, &order);
            let mut reversed = gens.clone();
            reversed.reverse();
            prop_assert_eq!(&buchberger(&reversed, &order), &gb);
            prop_assert_eq!(&buchberger(&gb, &order), &gb);
            for g in &gens {
                prop_assert!(invsys::groebner::normal_form_by(g, &gb, &order).is_zero());
            }
        }
    }

    #[test]
    fn duality_is_a_lattice_antiisomorphism(i in primary(3), j in primary(3)) {
        let (wi, wj) = (perp_ideal(&i).unwrap(), perp_ideal(&j).unwrap());
        prop_assert_eq!(wi.dim(), i.hilbert_data().unwrap().length());
        prop_assert!(perp_module(&wi).unwrap().same_ideal(&i).unwrap());
        prop_assert_eq!(perp_ideal(&i.sum(&j).unwrap()).unwrap(), wi.intersect(&wj).unwrap());
        prop_assert_eq!(perp_ideal(&i.intersect(&j).unwrap()).unwrap(), wi.sum(&wj).unwrap());
        prop_assert!(wi.is_closed());
    }
}
