//! Combinatorial algebra of monomial ideals. Nothing here touches Gröbner
//! machinery; the two engines check each other.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientLength};
use crate::polyring::{Monomial, Poly, PolyRing};

/// Largest variable count accepted by the vertex-cover enumeration.
pub const MAX_COVER_VARS: usize = 24;

/// A monomial ideal stored as its minimal generators, sorted. The zero
/// ideal has no generators; the unit ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    min_gens: Vec<Monomial>,
}

/// A prime generated by variables; the empty set is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VariablePrime {
    pub variables: Vec<usize>,
}

impl VariablePrime {
    pub fn to_monomial_ideal(&self, nvars: usize) -> MonomialIdeal {
        minimalize(
            nvars,
            self.variables.iter().map(|&i| Monomial::var(nvars, i)).collect(),
        )
    }
}

/// Divisibility antichain generating the same ideal as `gens`.
pub fn minimalize(nvars: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    MonomialIdeal {
        nvars,
        min_gens: kept,
    }
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            min_gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            min_gens: vec![Monomial::one(nvars)],
        }
    }

    /// `(x_1^q, ..., x_n^q)`.
    pub fn frobenius_maximal(nvars: usize, q: u64) -> Self {
        let gens = (0..nvars)
            .map(|i| {
                let mut e = vec![0; nvars];
                e[i] = q;
                Monomial::from_exponents(&e)
            })
            .collect();
        minimalize(nvars, gens)
    }

    /// The generators of `ideal` as a monomial ideal, if every generator is
    /// a single term.
    pub fn from_ideal(ideal: &Ideal) -> Option<Self> {
        if !ideal.is_monomial() {
            return None;
        }
        let n = ideal.ring().nvars();
        Some(minimalize(
            n,
            ideal
                .gens()
                .iter()
                .map(|g| g.lead_monomial().unwrap().clone())
                .collect(),
        ))
    }

    pub fn to_ideal(&self, ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(
            ring,
            self.min_gens
                .iter()
                .map(|m| Poly::term(ring, m.clone(), 1))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens.iter().any(|m| m.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.min_gens.iter().all(|m| m.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.min_gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.min_gens.clone();
        gens.extend(other.min_gens.iter().cloned());
        minimalize(self.nvars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for a in &self.min_gens {
            for b in &other.min_gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ok(minimalize(self.nvars, gens))
    }

    pub fn frobenius_power(&self, q: u64) -> Result<MonomialIdeal> {
        let gens = self
            .min_gens
            .iter()
            .map(|m| m.scaled(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(minimalize(self.nvars, gens))
    }

    /// `(self : m) = (g / gcd(g, m))`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .min_gens
            .iter()
            .map(|g| g.gcd(m).quotient_of(g).unwrap())
            .collect();
        minimalize(self.nvars, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.min_gens.len() * other.min_gens.len());
        for a in &self.min_gens {
            for b in &other.min_gens {
                gens.push(a.lcm(b));
            }
        }
        minimalize(self.nvars, gens)
    }

    /// Support sets of the generators as bit masks.
    fn support_masks(&self) -> Vec<u64> {
        self.min_gens.iter().map(|g| g.support_mask()).collect()
    }
}

/// Exact colon `(J : I)`: the intersection over generators `m` of `I` of
/// `(J : m)`. `(J : (0))` is the unit ideal.
pub fn mono_colon(j: &MonomialIdeal, i: &MonomialIdeal) -> MonomialIdeal {
    let mut acc = MonomialIdeal::unit(j.nvars);
    for m in &i.min_gens {
        if acc.is_zero() {
            break;
        }
        acc = acc.intersect(&j.colon_monomial(m));
    }
    acc
}

pub fn mono_intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    a.intersect(b)
}

/// Minimal primes of a squarefree monomial ideal: the minimal vertex covers
/// of the hypergraph whose edges are the generator supports.
pub fn minimal_primes_squarefree(i: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = i.nvars;
    if n > MAX_COVER_VARS {
        return Err(Error::TooManyVariables(n));
    }
    let edges = i.support_masks();
    if edges.contains(&0) {
        // the unit ideal has no primes over it
        return Ok(Vec::new());
    }
    let mut covers: Vec<u64> = (0u64..1 << n)
        .filter(|&c| edges.iter().all(|&e| e & c != 0))
        .collect();
    covers.sort_by_key(|c| (c.count_ones(), *c));
    let mut minimal: Vec<u64> = Vec::new();
    for c in covers {
        if !minimal.iter().any(|&m| m & !c == 0) {
            minimal.push(c);
        }
    }
    let mut primes: Vec<VariablePrime> = minimal
        .into_iter()
        .map(|mask| VariablePrime {
            variables: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
        })
        .collect();
    primes.sort();
    Ok(primes)
}

/// `Some(vars)` iff the minimal generators are distinct variables (the zero
/// ideal is the prime with no variables).
pub fn is_variable_prime(i: &MonomialIdeal) -> Option<VariablePrime> {
    let mut vars = Vec::with_capacity(i.min_gens.len());
    for g in &i.min_gens {
        let mut s = g.support();
        match (s.next(), s.next()) {
            (Some(v), None) if g.exponents()[v] == 1 => vars.push(v),
            _ => return None,
        }
    }
    vars.sort_unstable();
    Some(VariablePrime { variables: vars })
}

/// Number of monomials outside `i`; `Infinite` unless every variable has a
/// pure power among the generators.
pub fn standard_count(i: &MonomialIdeal) -> QuotientLength {
    if i.is_unit() {
        return QuotientLength::Finite(0);
    }
    let n = i.nvars;
    for v in 0..n {
        let has_power = i.min_gens.iter().any(|g| {
            let mut s = g.support();
            s.next() == Some(v) && s.next().is_none()
        });
        if !has_power {
            return QuotientLength::Infinite;
        }
    }
    let gens: Vec<Vec<u64>> = i.min_gens.iter().map(|g| g.exponents().to_vec()).collect();
    QuotientLength::Finite(count_below(&gens, n))
}

/// Counts exponent vectors of length `n` not dominating any of `gens`, by
/// slicing on the last variable. Assumes the ideal is artinian.
fn count_below(gens: &[Vec<u64>], n: usize) -> u64 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    let last = n - 1;
    let bound = gens
        .iter()
        .filter(|g| g[..last].iter().all(|&e| e == 0))
        .map(|g| g[last])
        .min()
        .expect("artinian ideal has a pure power of every variable");
    // slice boundaries: the distinct last-variable exponents below `bound`
    let mut cuts: Vec<u64> = gens.iter().map(|g| g[last]).filter(|&e| e < bound).collect();
    cuts.push(0);
    cuts.push(bound);
    cuts.sort_unstable();
    cuts.dedup();
    let mut total = 0;
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let slice: Vec<Vec<u64>> = gens
            .iter()
            .filter(|g| g[last] <= lo)
            .map(|g| g[..last].to_vec())
            .collect();
        total += (hi - lo) * count_below(&slice, last);
    }
    total
}
