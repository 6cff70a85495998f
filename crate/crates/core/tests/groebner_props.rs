mod common;

use std::sync::Arc;

use common::ring;
use frobsig::groebner::{buchberger, normal_form, Ideal, QuotientLength};
use frobsig::monomial::{minimalize, mono_colon, mono_intersect, standard_count, MonomialIdeal};
use frobsig::oracle::brute_mono_colon;
use frobsig::polyring::{Monomial, Poly, PolyRing};
use proptest::prelude::*;

fn poly(r: &Arc<PolyRing>, max_deg: u64, max_terms: usize) -> impl Strategy<Value = Poly> {
    let r = r.clone();
    let n = r.nvars();
    let p = r.p() as u64;
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), 1..p), 1..=max_terms).prop_map(
        move |terms| {
            Poly::from_terms(
                &r,
                terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)),
            )
            .unwrap()
        },
    )
}

fn gens(r: &Arc<PolyRing>, k: usize) -> impl Strategy<Value = Vec<Poly>> {
    prop::collection::vec(poly(r, 2, 3), 1..=k)
}

fn monomial_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u64..4, n), 1..4).prop_map(move |rows| {
        let ms: Vec<Monomial> = rows
            .into_iter()
            .map(|mut e| {
                if e.iter().all(|&a| a == 0) {
                    e[0] = 1;
                }
                Monomial::from_exponents(&e)
            })
            .collect();
        minimalize(n, ms)
    })
}

fn is_reduced(gb: &[Poly]) -> bool {
    gb.iter().enumerate().all(|(i, g)| {
        g.lead_coeff() == Some(1)
            && gb.iter().enumerate().all(|(j, h)| {
                i == j
                    || g.terms()
                        .iter()
                        .all(|(m, _)| !h.lead_monomial().unwrap().divides(m))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_is_reduced_and_contains_generators(fs in gens(&ring(5, 3), 3)) {
        let r = fs[0].ring().clone();
        let gb = buchberger(&fs, r.order()).unwrap();
        prop_assert!(is_reduced(&gb));
        for f in &fs {
            prop_assert!(normal_form(f, &gb).is_zero());
        }
        let mut rev = fs.clone();
        rev.reverse();
        let gb2 = buchberger(&rev, r.order()).unwrap();
        prop_assert_eq!(gb, gb2);
    }

    #[test]
    fn explicit_combinations_are_members(fs in gens(&ring(3, 3), 3), cs in prop::collection::vec(poly(&ring(3, 3), 1, 2), 3)) {
        let r = fs[0].ring().clone();
        let i = Ideal::new(&r, fs.clone());
        let mut comb = Poly::zero(&r);
        for (f, c) in fs.iter().zip(&cs) {
            comb = comb.add(&f.mul(&c.reorder(&r)).unwrap()).unwrap();
        }
        prop_assert!(i.contains(&comb));
        let nf = i.normal_form(&cs[0].reorder(&r));
        prop_assert_eq!(i.normal_form(&nf), nf.clone());
        prop_assert!(i.contains(&cs[0].reorder(&r).sub(&nf).unwrap()));
    }

    #[test]
    fn intersection_and_colon_bounds(a in gens(&ring(3, 3), 2), b in gens(&ring(3, 3), 2)) {
        let r = a[0].ring().clone();
        let i = Ideal::new(&r, a);
        let j = Ideal::new(&r, b);
        let cap = i.intersect(&j).unwrap();
        prop_assert!(cap.is_subset_of(&i) && cap.is_subset_of(&j));
        prop_assert!(i.product(&j).unwrap().is_subset_of(&cap));
        let col = i.colon(&j).unwrap();
        prop_assert!(i.is_subset_of(&col));
        prop_assert!(col.product(&j).unwrap().is_subset_of(&i));
    }

    #[test]
    fn engines_agree_on_monomial_algebra(i in monomial_ideal(3), j in monomial_ideal(3)) {
        let r = ring(2, 3);
        let (gi, gj) = (i.to_ideal(&r), j.to_ideal(&r));
        prop_assert!(mono_colon(&i, &j).to_ideal(&r).same_ideal(&gi.colon(&gj).unwrap()));
        prop_assert!(mono_intersect(&i, &j).to_ideal(&r).same_ideal(&gi.intersect(&gj).unwrap()));
        prop_assert!(i.sum(&j).to_ideal(&r).same_ideal(&gi.sum(&gj)));
        prop_assert!(i.product(&j).unwrap().to_ideal(&r).same_ideal(&gi.product(&gj).unwrap()));
        prop_assert_eq!(standard_count(&i), gi.quotient_length());
        let m = MonomialIdeal::frobenius_maximal(3, 4);
        let art = i.sum(&m);
        prop_assert_eq!(standard_count(&art), art.to_ideal(&r).quotient_length());
        prop_assert!(matches!(standard_count(&art), QuotientLength::Finite(_)));
    }

    #[test]
    fn colon_matches_box_enumeration(i in monomial_ideal(3), j in monomial_ideal(3)) {
        let cap = j.min_gens().iter().flat_map(|m| m.exponents().to_vec()).max().unwrap_or(0);
        prop_assert_eq!(brute_mono_colon(&j, &i, cap).unwrap(), mono_colon(&j, &i));
    }
}

#[test]
fn krull_dimension_of_known_rings() {
    let r = ring(3, 3);
    let x = Poly::var(&r, 0);
    let y = Poly::var(&r, 1);
    let z = Poly::var(&r, 2);
    assert_eq!(Ideal::zero(&r).krull_dim().unwrap(), 3);
    assert_eq!(Ideal::new(&r, vec![x.mul(&y).unwrap()]).krull_dim().unwrap(), 2);
    let cone = x.mul(&y).unwrap().sub(&z.pow(2).unwrap()).unwrap();
    assert_eq!(Ideal::new(&r, vec![cone]).krull_dim().unwrap(), 2);
    assert_eq!(Ideal::maximal(&r).krull_dim().unwrap(), 0);
    assert_eq!(
        Ideal::new(&r, vec![x.clone(), y.clone()]).quotient_length(),
        QuotientLength::Infinite
    );
}
