use std::cmp::Ordering;
use std::sync::Arc;

use super::reduce::{reduce, reduce_with, Divisors};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Poly, PolyRing};

/// Inputs with exponents above this bound are rejected so that the unchecked
/// monomial products inside the reduction loop cannot wrap.
const MAX_INPUT_EXPONENT: u64 = 1 << 40;

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State {
    ring: Arc<PolyRing>,
    polys: Vec<Poly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn lead(&self, i: usize) -> &Monomial {
        self.polys[i].lead_monomial().unwrap()
    }

    fn active_polys(&self) -> impl Iterator<Item = &Poly> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
    }

    /// Gebauer–Möller installation of a new basis element (Buchberger's
    /// product and chain criteria).
    fn update(&mut self, h: usize) {
        let hl = self.lead(h).clone();
        let olds: Vec<usize> = (0..h).filter(|&g| self.active[g]).collect();
        let cands: Vec<(usize, Monomial)> = olds.iter().map(|&g| (g, hl.lcm(self.lead(g)))).collect();

        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g1, l1)) in cands.iter().enumerate() {
            let coprime = hl.is_coprime(self.lead(*g1));
            let dominated_later = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l1));
            let dominated_kept = kept.iter().any(|(_, l2)| l2.divides(l1));
            if coprime || (!dominated_later && !dominated_kept) {
                kept.push((*g1, l1.clone()));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !hl.is_coprime(self.lead(*g)))
            .map(|(g, lcm)| Pair { i: g, j: h, lcm })
            .collect();

        let old_pairs = std::mem::take(&mut self.pairs);
        self.pairs = old_pairs
            .into_iter()
            .filter(|pr| {
                !(hl.divides(&pr.lcm)
                    && hl.lcm(self.lead(pr.i)) != pr.lcm
                    && hl.lcm(self.lead(pr.j)) != pr.lcm)
            })
            .collect();
        self.pairs.extend(fresh);

        for g in olds {
            if hl.divides(self.lead(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    /// Normal strategy: smallest lcm degree, then smallest lcm in the term
    /// order, then input position.
    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pr: &Pair) -> Poly {
        let (f, g) = (&self.polys[pr.i], &self.polys[pr.j]);
        let sf = f.lead_monomial().unwrap().quotient_of(&pr.lcm).unwrap();
        let sg = g.lead_monomial().unwrap().quotient_of(&pr.lcm).unwrap();
        // both monic: S = sf*f - sg*g; leading terms cancel
        let a = Poly::zero(&self.ring).add_scaled_unchecked(f, 1, Some(&sf));
        let minus_one = self.ring.p() - 1;
        a.add_scaled_unchecked(g, minus_one, Some(&sg))
    }

    fn insert(&mut self, h: Poly) -> bool {
        let h = h.monic();
        let is_unit = h.lead_monomial().map(|m| m.is_one()).unwrap_or(false);
        self.polys.push(h);
        self.active.push(false);
        let idx = self.polys.len() - 1;
        self.update(idx);
        is_unit
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, computed under
/// `order`. The output is monic, sorted ascending by leading monomial, and
/// depends only on the input list (deterministic pair selection).
pub fn buchberger(gens: &[Poly], order: &MonomialOrder) -> Result<Vec<Poly>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let base = first.ring();
    let ring = if base.order() == order {
        base.clone()
    } else {
        base.with_order(order.clone())
    };
    for g in gens {
        if g.ring().nvars() != ring.nvars() || g.ring().field() != ring.field() {
            return Err(Error::RingMismatch);
        }
        if g.terms()
            .iter()
            .any(|(m, _)| m.exponents().iter().any(|&e| e > MAX_INPUT_EXPONENT))
        {
            return Err(Error::ExponentOverflow);
        }
    }
    let gens: Vec<Poly> = gens.iter().map(|g| g.reorder(&ring)).collect();
    Ok(buchberger_in(&ring, &gens))
}

fn buchberger_in(ring: &Arc<PolyRing>, gens: &[Poly]) -> Vec<Poly> {
    let mut st = State {
        ring: ring.clone(),
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in gens {
        let h = reduce_with(g, &Divisors::new(st.active_polys()));
        if h.is_zero() {
            continue;
        }
        if st.insert(h) {
            return vec![Poly::one(ring)];
        }
    }
    while let Some(pr) = st.select() {
        let s = st.spoly(&pr);
        let h = reduce_with(&s, &Divisors::new(st.active_polys()));
        if h.is_zero() {
            continue;
        }
        if st.insert(h) {
            return vec![Poly::one(ring)];
        }
    }
    let basis: Vec<Poly> = st.active_polys().cloned().collect();
    interreduce(ring, basis)
}

/// Turns a minimal Gröbner basis into the reduced one.
fn interreduce(ring: &Arc<PolyRing>, basis: Vec<Poly>) -> Vec<Poly> {
    let mut out = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<Poly> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p.clone())
            .collect();
        out.push(reduce(g, &others).monic());
    }
    let order = ring.order();
    out.sort_by(|a, b| order.cmp(a.lead_monomial().unwrap(), b.lead_monomial().unwrap()));
    debug_assert!(out.windows(2).all(|w| {
        order.cmp(w[0].lead_monomial().unwrap(), w[1].lead_monomial().unwrap()) == Ordering::Less
    }));
    out
}

/// Remainder of `f` modulo a Gröbner basis. Zero iff `f` lies in the ideal.
pub fn normal_form(f: &Poly, gb: &[Poly]) -> Poly {
    match gb.first() {
        Some(g) if !PolyRing::same(g.ring(), f.ring()) => {
            let r = reduce(&f.reorder(g.ring()), gb);
            r.reorder(f.ring())
        }
        _ => reduce(f, gb),
    }
}
