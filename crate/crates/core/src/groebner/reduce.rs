use std::sync::Arc;

use crate::polyring::poly::merge_scaled;
use crate::polyring::{Coeff, Monomial, Poly, PolyRing};

/// Lead monomials of a basis with support masks for fast rejection.
pub(crate) struct Divisors<'a> {
    polys: Vec<&'a Poly>,
    masks: Vec<u64>,
}

impl<'a> Divisors<'a> {
    pub(crate) fn new<I: IntoIterator<Item = &'a Poly>>(basis: I) -> Self {
        let polys: Vec<&Poly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
        let masks = polys
            .iter()
            .map(|g| g.lead_monomial().unwrap().support_mask())
            .collect();
        Self { polys, masks }
    }

    pub(crate) fn find(&self, m: &Monomial) -> Option<&'a Poly> {
        let mm = m.support_mask();
        self.polys
            .iter()
            .zip(&self.masks)
            .find(|(g, &mask)| mask & !mm == 0 && g.lead_monomial().unwrap().divides(m))
            .map(|(g, _)| *g)
    }
}

fn merge_into(
    ring: &Arc<PolyRing>,
    a: &[(Monomial, Coeff)],
    b: &[(Monomial, Coeff)],
    c: Coeff,
    shift: &Monomial,
) -> Vec<(Monomial, Coeff)> {
    merge_scaled(ring, a, b, c, Some(shift))
}

/// Full reduction of `f` by `basis`: the result has no term divisible by
/// any leading monomial of `basis`. Basis elements need not be monic.
pub(crate) fn reduce_with(f: &Poly, divisors: &Divisors<'_>) -> Poly {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    let mut work: Vec<(Monomial, Coeff)> = f.terms().to_vec();
    let mut pos = 0;
    while pos < work.len() {
        let (m, c) = (&work[pos].0, work[pos].1);
        match divisors.find(m) {
            None => {
                rem.push(work[pos].clone());
                pos += 1;
            }
            Some(g) => {
                let lead = g.lead_monomial().unwrap();
                let shift = lead.quotient_of(m).unwrap();
                let factor = field.neg(field.mul(c, field.inv(g.lead_coeff().unwrap())));
                if g.len() == 1 {
                    pos += 1;
                    continue;
                }
                work = merge_into(&ring, &work[pos + 1..], &g.terms()[1..], factor, &shift);
                pos = 0;
            }
        }
    }
    Poly::from_sorted(&ring, rem)
}

pub(crate) fn reduce(f: &Poly, basis: &[Poly]) -> Poly {
    reduce_with(f, &Divisors::new(basis))
}

/// `f / g` when `g` divides `f` exactly.
pub(crate) fn exact_div(f: &Poly, g: &Poly) -> Option<Poly> {
    let ring = f.ring().clone();
    let field = ring.field();
    let lead = g.lead_monomial()?;
    let inv = field.inv(g.lead_coeff().unwrap());
    let mut quotient: Vec<(Monomial, Coeff)> = Vec::new();
    let mut work = f.terms().to_vec();
    while let Some((m, c)) = work.first().cloned() {
        let shift = lead.quotient_of(&m)?;
        let qc = field.mul(c, inv);
        quotient.push((shift.clone(), qc));
        work = merge_into(&ring, &work[1..], &g.terms()[1..], field.neg(qc), &shift);
    }
    // quotient terms come out in descending order
    Some(Poly::from_sorted(&ring, quotient))
}
