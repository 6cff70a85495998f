use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector. The derived `Ord` is plain lexicographic comparison of
/// the exponents and is only used for canonical sorting of generator sets,
/// never as a term order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u64; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u64]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    #[inline]
    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn degree(&self) -> u128 {
        self.0.iter().map(|&e| e as u128).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn support_mask(&self) -> u64 {
        self.support().fold(0, |acc, i| acc | (1 << (i % 64)))
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let m = Monomial(out);
        if m.degree() > u64::MAX as u128 {
            return Err(Error::ExponentOverflow);
        }
        Ok(m)
    }

    /// Product without overflow checks; exponent sums must fit (checked in
    /// debug builds).
    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Every exponent multiplied by `k`.
    pub fn scaled(&self, k: u64) -> Result<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &a in &self.0 {
            out.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        let m = Monomial(out);
        if m.degree() > u64::MAX as u128 {
            return Err(Error::ExponentOverflow);
        }
        Ok(m)
    }

    /// Same monomial with a zero exponent inserted at `at`.
    pub fn insert_var(&self, at: usize) -> Monomial {
        let mut v = self.0.clone();
        v.insert(at, 0);
        Monomial(v)
    }

    pub(crate) fn set(&mut self, i: usize, e: u64) {
        self.0[i] = e;
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
