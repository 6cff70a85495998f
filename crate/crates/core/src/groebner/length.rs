use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// `dim_k` of a quotient ring, or `Infinite` when the quotient is not
/// artinian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientLength {
    Finite(u64),
    Infinite,
}

impl QuotientLength {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientLength::Finite(v) => Some(v),
            QuotientLength::Infinite => None,
        }
    }
}

/// Largest number of variables whose monomials avoid every generator:
/// `dim S/(gens)` for a monomial ideal.
pub(crate) fn dimension_of_monomials(nvars: usize, gens: &[Monomial]) -> Result<usize> {
    if nvars > 24 {
        return Err(Error::TooManyVariables(nvars));
    }
    let masks: Vec<u64> = gens.iter().map(|g| g.support_mask()).collect();
    if masks.contains(&0) {
        return Err(Error::UnitIdeal);
    }
    let mut best = 0;
    for u in 0u64..(1u64 << nvars) {
        let size = u.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !u != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// Counts monomials outside the monomial ideal generated by `leads`, by
/// walking the box cut out by the pure-power generators.
pub(crate) fn count_standard_monomials(nvars: usize, leads: &[Monomial]) -> QuotientLength {
    if leads.iter().any(|m| m.is_one()) {
        return QuotientLength::Finite(0);
    }
    let mut bounds = vec![u64::MAX; nvars];
    for m in leads {
        let mut support = m.support();
        if let (Some(i), None) = (support.next(), support.next()) {
            bounds[i] = bounds[i].min(m.exponents()[i]);
        }
    }
    if bounds.contains(&u64::MAX) {
        return QuotientLength::Infinite;
    }
    if nvars == 0 {
        return QuotientLength::Finite(1);
    }
    let mut count = 0u64;
    let mut point = vec![0u64; nvars];
    'walk: loop {
        let cur = Monomial::from_exponents(&point);
        if !leads.iter().any(|l| l.divides(&cur)) {
            count += 1;
        }
        for i in (0..nvars).rev() {
            point[i] += 1;
            if point[i] < bounds[i] {
                continue 'walk;
            }
            point[i] = 0;
        }
        break;
    }
    QuotientLength::Finite(count)
}
