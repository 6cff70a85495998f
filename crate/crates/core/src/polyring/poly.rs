use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::{Coeff, PrimeField};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

/// `F_p[vars]` with a fixed term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Arc<Self> {
        assert_eq!(vars.len(), order.nvars(), "order/variable count mismatch");
        Arc::new(Self { field, vars, order })
    }

    /// Graded reverse lex with precedence matching `vars`.
    pub fn grevlex(field: PrimeField, vars: Vec<String>) -> Arc<Self> {
        let n = vars.len();
        Self::new(field, vars, MonomialOrder::grevlex(n))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Self::new(self.field, self.vars.clone(), order)
    }

    pub fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Sparse polynomial; terms are sorted strictly descending under the ring's
/// order and carry nonzero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = ring.field.reduce_signed(c);
        let terms = if c == 0 {
            vec![]
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), 1)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        let c = c % ring.p();
        let terms = if c == 0 { vec![] } else { vec![(m, c)] };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated,
    /// unsorted, unreduced) terms.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, u64)>,
    {
        let field = ring.field;
        let mut v: Vec<(Monomial, Coeff)> = Vec::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::VariableCount {
                    expected: ring.nvars(),
                    got: m.nvars(),
                });
            }
            v.push((m, field.reduce(c)));
        }
        Ok(Self::from_unsorted(ring, v))
    }

    pub(crate) fn from_unsorted(ring: &Arc<PolyRing>, mut v: Vec<(Monomial, Coeff)>) -> Self {
        let field = ring.field;
        let order = &ring.order;
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, Coeff)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| *c != 0);
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    /// A single term (a scalar multiple of a monomial).
    pub fn is_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<Coeff> {
        self.terms.first().map(|t| t.1)
    }

    pub fn total_degree(&self) -> Option<u128> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring.nvars() != other.ring.nvars() {
            return Err(Error::VariableCount {
                expected: self.ring.nvars(),
                got: other.ring.nvars(),
            });
        }
        if !PolyRing::same(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.add_scaled_unchecked(other, 1, None))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let minus_one = self.ring.p() - 1;
        Ok(self.add_scaled_unchecked(other, minus_one, None))
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.ring.p() - 1)
    }

    pub fn scale(&self, c: Coeff) -> Poly {
        let field = self.ring.field;
        let c = c % field.p();
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.lead_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c)),
        }
    }

    /// `self + c * m * other` by merging; `m = None` means `m = 1`.
    /// Exponent sums are assumed to fit.
    pub(crate) fn add_scaled_unchecked(&self, other: &Poly, c: Coeff, m: Option<&Monomial>) -> Poly {
        let terms = merge_scaled(&self.ring, &self.terms, &other.terms, c, m);
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: Coeff) -> Result<Poly> {
        let field = self.ring.field;
        let c = c % field.p();
        if c == 0 {
            return Ok(Poly::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, a) in &self.terms {
            terms.push((t.checked_mul(m)?, field.mul(*a, c)));
        }
        // multiplication by a monomial preserves the order
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        for (m, c) in &small.terms {
            let shifted = big.mul_term(m, *c)?;
            acc = merge_scaled(&self.ring, &acc, &shifted.terms, 1, None);
        }
        Ok(Poly {
            ring: self.ring.clone(),
            terms: acc,
        })
    }

    pub fn pow(&self, mut exp: u64) -> Result<Poly> {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f^q` for `q` a power of `p`: over F_p this is `sum c_i m_i^q`.
    pub fn frobenius_pow(&self, q: u64) -> Result<Poly> {
        self.ring.field.log_q(q)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.scaled(q)?, *c));
        }
        // scaling all exponents by q > 0 preserves every order we support
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]`. Unmapped target variables get exponent 0.
    pub fn map_into(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Poly {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let v = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(n);
                for (i, &e) in m.exponents().iter().enumerate() {
                    out.set(var_map[i], e);
                }
                (out, *c)
            })
            .collect();
        Poly::from_unsorted(target, v)
    }

    /// Same variables, re-sorted for `target` (which must have the same
    /// field and variable count).
    pub fn reorder(&self, target: &Arc<PolyRing>) -> Poly {
        if PolyRing::same(&self.ring, target) {
            return self.clone();
        }
        let ident: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_into(target, &ident)
    }

    pub fn degree_in(&self, var: usize) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }
}

/// `a + c*m*b` for canonical term slices of the same ring.
pub(crate) fn merge_scaled(
    ring: &Arc<PolyRing>,
    a: &[(Monomial, Coeff)],
    b: &[(Monomial, Coeff)],
    c: Coeff,
    m: Option<&Monomial>,
) -> Vec<(Monomial, Coeff)> {
    let field = ring.field;
    let order = &ring.order;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(t, k)| {
        let t = match m {
            Some(m) => t.mul_unchecked(m),
            None => t.clone(),
        };
        (t, field.mul(*k, c))
    });
    let mut next_b = bi.next();
    loop {
        match (a.get(i), next_b.take()) {
            (None, None) => break,
            (Some(x), None) => {
                out.extend_from_slice(&a[i..]);
                let _ = x;
                break;
            }
            (None, Some(y)) => {
                if y.1 != 0 {
                    out.push(y);
                }
                out.extend(bi.by_ref().filter(|t| t.1 != 0));
                break;
            }
            (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                    next_b = Some(y);
                }
                Ordering::Less => {
                    if y.1 != 0 {
                        out.push(y);
                    }
                    next_b = bi.next();
                }
                Ordering::Equal => {
                    let s = field.add(x.1, y.1);
                    if s != 0 {
                        out.push((y.0, s));
                    }
                    i += 1;
                    next_b = bi.next();
                }
            },
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{}", self.ring.render_monomial(m))?;
            } else {
                write!(f, "{}*{}", c, self.ring.render_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::grevlex(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
        )
    }

    fn x(r: &Arc<PolyRing>, i: usize) -> Poly {
        Poly::var(r, i)
    }

    #[test]
    fn add_examples() {
        let r = ring(3, &["x", "y"]);
        let f = x(&r, 0).add(&x(&r, 1)).unwrap();
        let g = x(&r, 0).scale(2);
        assert_eq!(f.add(&g).unwrap(), x(&r, 1));
        assert_eq!(f.add(&Poly::zero(&r)).unwrap(), f);
        let x2 = x(&r, 0).pow(2).unwrap();
        let a = x2.add(&Poly::constant(&r, 1)).unwrap();
        let b = x2.add(&Poly::constant(&r, 2)).unwrap();
        assert_eq!(a.add(&b).unwrap(), x2.scale(2));
        assert_eq!(a.add(&b).unwrap().to_string(), "2*x^2");
    }

    #[test]
    fn mul_examples() {
        let r = ring(5, &["x", "y"]);
        let s = x(&r, 0).add(&x(&r, 1)).unwrap();
        let d = x(&r, 0).sub(&x(&r, 1)).unwrap();
        let prod = s.mul(&d).unwrap();
        let expect = x(&r, 0).pow(2).unwrap().sub(&x(&r, 1).pow(2).unwrap()).unwrap();
        assert_eq!(prod, expect);
        assert_eq!(s.mul(&Poly::one(&r)).unwrap(), s);
        let r2 = ring(2, &["x", "y"]);
        let s2 = x(&r2, 0).add(&x(&r2, 1)).unwrap();
        assert_eq!(s2.pow(2).unwrap().to_string(), "x^2 + y^2");
    }

    #[test]
    fn frobenius_examples() {
        let r = ring(3, &["x", "y"]);
        let xy = x(&r, 0).mul(&x(&r, 1)).unwrap();
        assert_eq!(xy.frobenius_pow(3).unwrap().to_string(), "x^3*y^3");
        let f = x(&r, 0).add(&x(&r, 1).scale(2)).unwrap();
        let naive = (1..9).fold(f.clone(), |acc, _| acc.mul(&f).unwrap());
        assert_eq!(f.frobenius_pow(9).unwrap(), naive);
        assert_eq!(naive.to_string(), "x^9 + 2*y^9");
        assert!(matches!(f.frobenius_pow(6), Err(Error::NotPowerOfP { .. })));
    }

    #[test]
    fn mismatch_and_overflow() {
        let r = ring(3, &["x", "y"]);
        let r3 = ring(3, &["x", "y", "z"]);
        assert!(matches!(
            x(&r, 0).add(&x(&r3, 0)),
            Err(Error::VariableCount { .. })
        ));
        let big = Poly::term(&r, Monomial::from_exponents(&[u64::MAX / 2, 0]), 1);
        let big2 = big.mul(&big).unwrap();
        assert_eq!(big2.mul(&big).err(), Some(Error::ExponentOverflow));
        assert_eq!(big.frobenius_pow(3).err(), Some(Error::ExponentOverflow));
    }

    #[test]
    fn rendering() {
        let r = ring(5, &["x", "y", "z"]);
        let f = Poly::from_terms(
            &r,
            [
                (Monomial::from_exponents(&[2, 1, 0]), 2),
                (Monomial::from_exponents(&[0, 0, 1]), 1),
                (Monomial::one(3), 4),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "2*x^2*y + z + 4");
        assert_eq!(Poly::zero(&r).to_string(), "0");
    }
}
