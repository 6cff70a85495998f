use std::sync::{Arc, OnceLock};

use super::buchberger::{buchberger, normal_form};
use super::length::{dimension_of_monomials, QuotientLength};
use super::reduce::exact_div;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, OrderKind, Poly, PolyRing};

/// An ideal of `ring` given by generators. The reduced Gröbner basis under
/// the ring's order is computed on first use and cached.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Self {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.reorder(ring))
            .collect();
        Self {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, vec![Poly::one(ring)])
    }

    pub fn from_monomials<'a, I: IntoIterator<Item = &'a Monomial>>(ring: &Arc<PolyRing>, ms: I) -> Self {
        let gens = ms.into_iter().map(|m| Poly::term(ring, m.clone(), 1)).collect();
        Self::new(ring, gens)
    }

    /// `m^{[q]} = (x_1^q, ..., x_n^q)`.
    pub fn frobenius_maximal(ring: &Arc<PolyRing>, q: u64) -> Self {
        let n = ring.nvars();
        let gens = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = q;
                Poly::term(ring, Monomial::from_exponents(&e), 1)
            })
            .collect();
        Self::new(ring, gens)
    }

    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced Gröbner basis under the ring's order.
    pub fn gb(&self) -> &[Poly] {
        self.gb.get_or_init(|| {
            buchberger(&self.gens, self.ring.order()).expect("exponents within the supported range")
        })
    }

    /// Like [`Ideal::gb`] but reports exponent overflow instead of panicking.
    pub fn try_gb(&self) -> Result<&[Poly]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.gens, self.ring.order())?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn gb_under(&self, order: &MonomialOrder) -> Result<Vec<Poly>> {
        if order == self.ring.order() {
            return Ok(self.try_gb()?.to_vec());
        }
        buchberger(&self.gens, order)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().map(|g| g.is_one()).unwrap_or(false)
    }

    /// All generators are single terms.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_term())
    }

    pub fn contains(&self, f: &Poly) -> bool {
        normal_form(f, self.gb()).is_zero()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(f, self.gb())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Equality as ideals (compares reduced Gröbner bases).
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        let a = self.gb();
        let b = other.gb();
        a.len() == b.len() && a.iter().zip(b).all(|(f, g)| f.terms() == g.terms())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gb()
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().map(|g| g.reorder(&self.ring)));
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(&g.reorder(&self.ring))?);
            }
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `I^{[q]}`: generated by the q-th powers of the generators.
    pub fn frobenius_power(&self, q: u64) -> Result<Ideal> {
        self.ring.field().log_q(q)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.frobenius_pow(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let mut vars = Vec::with_capacity(n + 1);
        vars.push("_t".to_string());
        vars.extend(self.ring.vars().iter().cloned());
        let ext = PolyRing::new(
            self.ring.field(),
            vars,
            MonomialOrder::new(OrderKind::Elimination { block: 1 }, n + 1),
        );
        let shift: Vec<usize> = (1..=n).collect();
        let t = Poly::var(&ext, 0);
        let one_minus_t = Poly::one(&ext).sub(&t)?;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(f.map_into(&ext, &shift).mul(&t)?);
        }
        for g in &other.gens {
            gens.push(g.reorder(&self.ring).map_into(&ext, &shift).mul(&one_minus_t)?);
        }
        let gb = buchberger(&gens, ext.order())?;
        let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
        let out = gb
            .iter()
            .filter(|g| g.degree_in(0) == 0)
            .map(|g| drop_first_var(g, &self.ring, &back))
            .collect();
        Ok(Ideal::new(&self.ring, out))
    }

    /// `(self : other) = {s : s·other ⊆ self}`, as the intersection of the
    /// principal colons `(self : f)`; `(self : (0))` is the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for f in other.gens() {
            let f = f.reorder(&self.ring);
            if self.contains(&f) {
                continue;
            }
            let part = self.colon_poly(&f)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    fn colon_poly(&self, f: &Poly) -> Result<Ideal> {
        let principal = Ideal::new(&self.ring, vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens()
            .iter()
            .map(|g| {
                exact_div(g, f).ok_or_else(|| Error::Internal("intersection generator not divisible".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `dim_k S/I`, or `Infinite` when the quotient is not artinian.
    pub fn quotient_length(&self) -> QuotientLength {
        super::length::count_standard_monomials(self.ring.nvars(), &self.leading_monomials())
    }

    /// Krull dimension of `S/I` via the initial ideal.
    pub fn krull_dim(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        dimension_of_monomials(self.ring.nvars(), &self.leading_monomials())
    }
}

fn drop_first_var(g: &Poly, target: &Arc<PolyRing>, back: &[usize]) -> Poly {
    let n = target.nvars();
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let e = m.exponents();
            let mut out = vec![0u64; n];
            for (i, &b) in back.iter().enumerate().skip(1) {
                out[b] = e[i];
            }
            (Monomial::from_exponents(&out), *c as u64)
        })
        .collect::<Vec<_>>();
    Poly::from_terms(target, terms).expect("variable count matches")
}
