use rayon::prelude::*;

use super::presentation::{RingPresentation, SplitIdeal};
use super::ratio::Fraction;
use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientLength};
use crate::monomial::{mono_colon, standard_count, MonomialIdeal};
use crate::polyring::Poly;

/// Largest `q = p^e` accepted anywhere.
pub const Q_CAP: u64 = 1 << 20;

/// `p^e`, rejecting `e = 0` and anything above [`Q_CAP`].
pub fn q_for(p: u64, e: u32) -> Result<u64> {
    if e == 0 {
        return Err(Error::Precondition("e must be at least 1".into()));
    }
    match p.checked_pow(e) {
        Some(q) if q <= Q_CAP => Ok(q),
        _ => Err(Error::QTooLarge { p, e }),
    }
}

impl SplitIdeal {
    pub(crate) fn to_ideal(&self, r: &RingPresentation) -> Ideal {
        match self {
            SplitIdeal::Mono(m) => m.to_ideal(r.ring()),
            SplitIdeal::Poly(i) => i.clone(),
        }
    }

    pub(crate) fn length(&self) -> QuotientLength {
        match self {
            SplitIdeal::Mono(m) => standard_count(m),
            SplitIdeal::Poly(i) => i.quotient_length(),
        }
    }
}

pub(crate) fn frobenius_colon_raw(r: &RingPresentation, e: u32) -> Result<SplitIdeal> {
    let q = q_for(r.p() as u64, e)?;
    if let Some(hit) = r.colon_cache.lock().unwrap().get(&e) {
        return Ok(hit.clone());
    }
    let out = match r.mono_engine() {
        Some(i) => SplitIdeal::Mono(mono_colon(&i.frobenius_power(q)?, i)),
        None => {
            let i = r.ideal();
            let colon = i.frobenius_power(q)?.colon(i)?;
            // cache the reduced basis as the generating set
            let gb = colon.try_gb()?.to_vec();
            SplitIdeal::Poly(Ideal::new(r.ring(), gb))
        }
    };
    r.colon_cache.lock().unwrap().insert(e, out.clone());
    Ok(out)
}

/// `(I^{[q]} : I)` in `S`.
pub fn frobenius_colon(r: &RingPresentation, e: u32) -> Result<Ideal> {
    Ok(frobenius_colon_raw(r, e)?.to_ideal(r))
}

pub(crate) fn splitting_ideal_raw(r: &RingPresentation, e: u32) -> Result<SplitIdeal> {
    let q = q_for(r.p() as u64, e)?;
    if let Some(hit) = r.split_cache.lock().unwrap().get(&e) {
        return Ok(hit.clone());
    }
    let colon = frobenius_colon_raw(r, e)?;
    let out = match colon {
        SplitIdeal::Mono(j) => {
            SplitIdeal::Mono(mono_colon(&MonomialIdeal::frobenius_maximal(r.nvars(), q), &j))
        }
        SplitIdeal::Poly(j) => {
            let mq = Ideal::frobenius_maximal(r.ring(), q);
            let a = mq.colon(&j)?;
            let gb = a.try_gb()?.to_vec();
            SplitIdeal::Poly(Ideal::new(r.ring(), gb))
        }
    };
    r.split_cache.lock().unwrap().insert(e, out.clone());
    Ok(out)
}

/// `A_e`, returned as its preimage `m^{[q]} : (I^{[q]} : I)` in `S`.
pub fn splitting_ideal(r: &RingPresentation, e: u32) -> Result<Ideal> {
    Ok(splitting_ideal_raw(r, e)?.to_ideal(r))
}

/// Free rank `a_q = λ(S / A_e)` (α = 0).
pub fn aq(r: &RingPresentation, e: u32) -> Result<u64> {
    splitting_ideal_raw(r, e)?
        .length()
        .finite()
        .ok_or_else(|| Error::Internal(format!("A_{e} is not m-primary")))
}

/// Fedder: `R` is F-pure iff `(I^{[p]} : I) ⊄ m^{[p]}`.
pub fn fedder_is_fpure(r: &RingPresentation) -> Result<bool> {
    let p = r.p() as u64;
    Ok(match frobenius_colon_raw(r, 1)? {
        SplitIdeal::Mono(j) => {
            let mp = MonomialIdeal::frobenius_maximal(r.nvars(), p);
            j.min_gens().iter().any(|g| !mp.contains(g))
        }
        SplitIdeal::Poly(j) => {
            let mp = Ideal::frobenius_maximal(r.ring(), p);
            j.gens().iter().any(|g| !mp.normal_form(g).is_zero())
        }
    })
}

/// Glassbrenner: the map `R -> R^{1/q}`, `1 ↦ c^{1/q}` splits iff
/// `c ∉ A_e`.
pub fn split_test(r: &RingPresentation, c: &Poly, e: u32) -> Result<bool> {
    let a = splitting_ideal(r, e)?;
    Ok(!a.contains(&c.reorder(r.ring())))
}

#[derive(Debug, Clone)]
pub struct SplittingEntry {
    pub e: u32,
    pub q: u64,
    pub splitting_ideal: Ideal,
    pub aq: u64,
    /// `a_q / q^k` for `k = 0..=n`.
    pub ratios: Vec<Fraction>,
}

#[derive(Debug, Clone)]
pub struct SplittingReport {
    pub fpure: bool,
    pub entries: Vec<SplittingEntry>,
}

/// The chain `A_1 ⊇ A_2 ⊇ ...` with free ranks, for `e = 1..=e_max`.
/// Levels are computed in parallel.
pub fn splitting_report(r: &RingPresentation, e_max: u32) -> Result<SplittingReport> {
    let fpure = fedder_is_fpure(r)?;
    let n = r.nvars() as u32;
    let entries = (1..=e_max)
        .into_par_iter()
        .map(|e| {
            let q = q_for(r.p() as u64, e)?;
            let a = aq(r, e)?;
            Ok(SplittingEntry {
                e,
                q,
                splitting_ideal: splitting_ideal(r, e)?,
                aq: a,
                ratios: (0..=n).map(|k| Fraction::over_power(a, q, k)).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SplittingReport { fpure, entries })
}
