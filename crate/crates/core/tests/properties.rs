use proptest::prelude::*;
use spreadpoly_core::poly::{BiPoly, BigRat, UniPoly};
use spreadpoly_core::surd::QuadExt;

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| BigRat::new(n.into(), d.into()))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..5, 0u32..5, -9i64..=9), 0..=5).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|(a, b, c)| (a, b, BigRat::from_integer(c.into()))))
    })
}

fn even_bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..4, 0u32..5, -9i64..=9), 0..=5).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|(a, b, c)| (2 * a, b, BigRat::from_integer(c.into()))))
    })
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 0..=6).prop_map(|c| UniPoly::from_coeffs(&c))
}

fn quad(d: i64) -> impl Strategy<Value = QuadExt> {
    (small_rat(), small_rat()).prop_map(move |(a, b)| QuadExt::new(a, b, BigRat::from_integer(d.into())))
}

proptest! {
    #[test]
    fn ring_axioms(p in bipoly(), q in bipoly(), r in bipoly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(-(-p.clone()), p);
    }

    #[test]
    fn canonical_form_has_no_zero_terms(p in bipoly(), q in bipoly()) {
        let prod = &p * &q;
        prop_assert!(prod.terms().all(|(_, _, c)| c != &BigRat::from_integer(0.into())));
        let degs: Vec<_> = prod.terms().map(|(a, b, _)| (a, b)).collect();
        let mut sorted = degs.clone();
        sorted.sort_by(|l, r| r.cmp(l));
        prop_assert_eq!(degs, sorted);
    }

    #[test]
    fn evaluate_is_a_homomorphism(p in bipoly(), q in bipoly(), a in small_rat(), b in small_rat()) {
        prop_assert_eq!((&p * &q).evaluate(&a, &b), p.evaluate(&a, &b) * q.evaluate(&a, &b));
        prop_assert_eq!((&p + &q).evaluate(&a, &b), p.evaluate(&a, &b) + q.evaluate(&a, &b));
    }

    #[test]
    fn pow_matches_repeated_product(p in bipoly(), k in 0u32..5) {
        let mut acc = BiPoly::one();
        for _ in 0..k {
            acc = &acc * &p;
        }
        prop_assert_eq!(p.pow(k), acc);
    }

    #[test]
    fn even_substitute_round_trip(p in even_bipoly()) {
        // substituting y^2 -> x and then x -> y^2 gives p back
        let halved = p.even_substitute(&BiPoly::x()).unwrap();
        let y_squared = BiPoly::x().pow(2);
        let back = BiPoly::from_terms(halved.terms().map(|(a, b, c)| (2 * a, b, c.clone())));
        prop_assert_eq!(&back, &p);
        // and even_substitute agrees with evaluation at a square
        let (q, s0) = (BigRat::new(3.into(), 2.into()), BigRat::new((-5).into(), 7.into()));
        prop_assert_eq!(halved.evaluate(&(&q * &q), &s0), p.evaluate(&q, &s0));
        prop_assert_eq!(p.even_substitute(&y_squared).unwrap(), p.clone());
    }

    #[test]
    fn compose_is_evaluation_compatible(p in unipoly(), r in unipoly(), a in small_rat()) {
        prop_assert_eq!(p.compose(&r).evaluate(&a), p.evaluate(&r.evaluate(&a)));
    }

    #[test]
    fn surd_norm_is_rational(u in quad(7)) {
        let n = u.mul(&u.conj()).unwrap();
        prop_assert!(n.is_rational());
        prop_assert_eq!(n.a, u.norm());
        prop_assert_eq!(u.pow(2), u.mul(&u).unwrap());
        prop_assert_eq!(u.conj().conj(), u);
    }

    #[test]
    fn surd_field_axioms(u in quad(3), v in quad(3), w in quad(3)) {
        prop_assert_eq!(u.mul(&v).unwrap(), v.mul(&u).unwrap());
        prop_assert_eq!(u.mul(&v.add(&w).unwrap()).unwrap(), u.mul(&v).unwrap().add(&u.mul(&w).unwrap()).unwrap());
        if !v.is_zero() {
            prop_assert_eq!(u.div(&v).unwrap().mul(&v).unwrap(), u);
        }
    }
}
