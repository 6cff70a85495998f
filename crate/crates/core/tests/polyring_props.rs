mod common;

use std::sync::Arc;

use common::ring;
use frobsig::cli::parse_poly;
use frobsig::polyring::{Monomial, MonomialOrder, OrderKind, Poly, PolyRing};
use proptest::prelude::*;

fn poly_strategy(r: Arc<PolyRing>) -> impl Strategy<Value = Poly> {
    let n = r.nvars();
    let p = r.p() as u64;
    prop::collection::vec((prop::collection::vec(0u64..4, n), 0u64..p), 0..6).prop_map(move |terms| {
        Poly::from_terms(
            &r,
            terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)),
        )
        .unwrap()
    })
}

fn triple(p: u64, n: usize) -> impl Strategy<Value = (Poly, Poly, Poly)> {
    let r = ring(p, n);
    (
        poly_strategy(r.clone()),
        poly_strategy(r.clone()),
        poly_strategy(r),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in triple(5, 3)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), Poly::zero(a.ring()));
    }

    #[test]
    fn terms_are_sorted_and_nonzero((a, b, _c) in triple(3, 3)) {
        let prod = a.mul(&b).unwrap();
        let order = prod.ring().order();
        for w in prod.terms().windows(2) {
            prop_assert_eq!(order.cmp(&w[0].0, &w[1].0), std::cmp::Ordering::Greater);
        }
        prop_assert!(prod.terms().iter().all(|(_, c)| *c != 0));
    }

    #[test]
    fn frobenius_is_a_ring_map((a, b, _c) in triple(3, 2)) {
        let q = 9;
        prop_assert_eq!(a.frobenius_pow(q).unwrap(), a.pow(q).unwrap());
        let sum = a.add(&b).unwrap().frobenius_pow(q).unwrap();
        prop_assert_eq!(sum, a.frobenius_pow(q).unwrap().add(&b.frobenius_pow(q).unwrap()).unwrap());
    }

    #[test]
    fn display_parses_back((a, _b, _c) in triple(7, 3)) {
        let text = a.to_string();
        prop_assert_eq!(parse_poly(&text, a.ring()).unwrap(), a);
    }

    #[test]
    fn orders_are_multiplicative(
        a in prop::collection::vec(0u64..5, 4),
        b in prop::collection::vec(0u64..5, 4),
        c in prop::collection::vec(0u64..5, 4),
    ) {
        let (ma, mb, mc) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
        for kind in [OrderKind::GradedReverseLex, OrderKind::Lex, OrderKind::GradedLex, OrderKind::Elimination { block: 2 }] {
            let o = MonomialOrder::new(kind, 4);
            let lhs = o.cmp(&ma, &mb);
            let rhs = o.cmp(&ma.checked_mul(&mc).unwrap(), &mb.checked_mul(&mc).unwrap());
            prop_assert_eq!(lhs, rhs);
            prop_assert_ne!(o.cmp(&mc, &Monomial::one(4)), std::cmp::Ordering::Less);
        }
    }
}
